//! Seeded cross-checks: every closed-form boundary evaluation is compared
//! against the direct limit of normalised distance functionals, computed by
//! the oracle in `limits` along the corresponding geodesics.

use cone_core::hilbert::{
    detour_distance_variation, exp_extension_hilbert, VariationHorofunction,
};
use cone_core::limits::{
    detour_cost_prelimit, limit_functional, LimitMetric, LimitPath, Schedule,
};
use cone_core::order::project_det_one;
use cone_core::thompson::{
    detour_distance_thompson, eval_norm_horofunction, exp_extension_thompson,
    BusemannPath,
};
use cone_core::{
    AlgebraDescriptor, BoundaryMode, BoundaryParams, ConePoint, Element, TangentVector,
};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

fn kinds() -> Vec<AlgebraDescriptor> {
    vec![
        AlgebraDescriptor::RealSymmetric { n: 3 },
        AlgebraDescriptor::ComplexHermitian { n: 2 },
        AlgebraDescriptor::SpinFactor { dim: 4 },
    ]
}

fn random_element(rng: &mut ChaCha8Rng, algebra: AlgebraDescriptor) -> Element {
    let coords: Vec<f64> = (0..algebra.coord_len()).map(|_| rng.gen_range(-1.0..1.0)).collect();
    Element::new(algebra, coords).unwrap()
}

fn random_interior(rng: &mut ChaCha8Rng, algebra: AlgebraDescriptor) -> Element {
    random_element(rng, algebra).exp().unwrap()
}

fn random_frame(rng: &mut ChaCha8Rng, algebra: AlgebraDescriptor) -> Vec<Element> {
    random_element(rng, algebra)
        .spectral_decompose()
        .unwrap()
        .frame()
        .to_vec()
}

/// A random split of `0..rank` into nonempty-union disjoint sets with
/// weights normalised for the requested mode.
fn random_params(
    rng: &mut ChaCha8Rng,
    algebra: AlgebraDescriptor,
    mode: BoundaryMode,
) -> BoundaryParams {
    let frame = random_frame(rng, algebra);
    let rank = algebra.rank();
    let (set_i, set_j) = random_split(rng, rank, mode);
    let alpha = random_alpha(rng, &set_i, &set_j, mode);
    BoundaryParams::new(frame, set_i, set_j, alpha, mode).unwrap()
}

fn random_split(rng: &mut ChaCha8Rng, rank: usize, mode: BoundaryMode) -> (Vec<usize>, Vec<usize>) {
    loop {
        let mut set_i = Vec::new();
        let mut set_j = Vec::new();
        for k in 0..rank {
            match rng.gen_range(0..3) {
                0 => set_i.push(k),
                1 => set_j.push(k),
                _ => {}
            }
        }
        let ok = match mode {
            BoundaryMode::Thompson => !(set_i.is_empty() && set_j.is_empty()),
            BoundaryMode::Hilbert => !set_i.is_empty() && !set_j.is_empty(),
        };
        if ok {
            return (set_i, set_j);
        }
    }
}

fn random_alpha(
    rng: &mut ChaCha8Rng,
    set_i: &[usize],
    set_j: &[usize],
    mode: BoundaryMode,
) -> BTreeMap<usize, f64> {
    let mut alpha: BTreeMap<usize, f64> = set_i
        .iter()
        .chain(set_j)
        .map(|&k| (k, rng.gen_range(0.0..2.0)))
        .collect();
    match mode {
        BoundaryMode::Thompson => {
            let min = alpha.values().fold(f64::INFINITY, |m, &v| m.min(v));
            alpha.values_mut().for_each(|v| *v -= min);
        }
        BoundaryMode::Hilbert => {
            for set in [set_i, set_j] {
                let min = set.iter().map(|k| alpha[k]).fold(f64::INFINITY, f64::min);
                for k in set {
                    *alpha.get_mut(k).unwrap() -= min;
                }
            }
        }
    }
    alpha
}

/// An element in the span of the parameter frame, optionally traceless.
fn frame_span_probe(
    rng: &mut ChaCha8Rng,
    params: &BoundaryParams,
    traceless: bool,
) -> Element {
    let mut acc = Element::zero(params.algebra()).unwrap();
    for p in params.frame() {
        acc = &acc + &p.scale(rng.gen_range(-2.0..2.0));
    }
    if traceless {
        let rank = params.algebra().rank() as f64;
        let shift = acc.trace() / rank;
        acc = &acc - &Element::unit(params.algebra()).unwrap().scale(shift);
    }
    acc
}

#[test]
fn thompson_closed_form_matches_distance_limit() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for algebra in kinds() {
        for _ in 0..4 {
            let params = random_params(&mut rng, algebra, BoundaryMode::Thompson);
            let h = exp_extension_thompson(&params).unwrap();
            let path = LimitPath::Busemann(BusemannPath::new(params).unwrap());
            let probes: Vec<Element> =
                (0..3).map(|_| random_interior(&mut rng, algebra)).collect();
            let reports =
                limit_functional(&path, &probes, LimitMetric::Thompson, &Schedule::default())
                    .unwrap();
            for (probe, report) in probes.iter().zip(&reports) {
                assert!(report.converged, "increments {:?}", report.increments);
                let closed = h.eval(&ConePoint::interior(probe.clone()).unwrap()).unwrap();
                assert!(
                    (closed - report.last_value()).abs() <= 1e-7,
                    "{algebra}: closed {closed} vs limit {}",
                    report.last_value()
                );
            }
        }
    }
}

#[test]
fn hilbert_closed_form_matches_distance_limit() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for algebra in kinds() {
        for _ in 0..4 {
            let params = random_params(&mut rng, algebra, BoundaryMode::Hilbert);
            let h = exp_extension_hilbert(&params).unwrap();
            let path = LimitPath::Busemann(BusemannPath::new(params).unwrap());
            let probes: Vec<cone_core::ProjectivePoint> = (0..3)
                .map(|_| {
                    let x = ConePoint::interior(random_interior(&mut rng, algebra)).unwrap();
                    project_det_one(&x).unwrap()
                })
                .collect();
            let probe_elements: Vec<Element> =
                probes.iter().map(|p| p.element().clone()).collect();
            let reports = limit_functional(
                &path,
                &probe_elements,
                LimitMetric::Hilbert,
                &Schedule::default(),
            )
            .unwrap();
            for (probe, report) in probes.iter().zip(&reports) {
                assert!(report.converged);
                let closed = h.eval(probe).unwrap();
                assert!(
                    (closed - report.last_value()).abs() <= 1e-7,
                    "{algebra}: closed {closed} vs limit {}",
                    report.last_value()
                );
            }
        }
    }
}

#[test]
fn norm_horofunction_matches_limit_on_frame_spans() {
    let mut rng = ChaCha8Rng::seed_from_u64(37);
    for algebra in kinds() {
        for _ in 0..4 {
            let params = random_params(&mut rng, algebra, BoundaryMode::Thompson);
            let probes: Vec<Element> = (0..3)
                .map(|_| frame_span_probe(&mut rng, &params, false))
                .collect();
            let path = LimitPath::Busemann(BusemannPath::new(params.clone()).unwrap());
            let reports =
                limit_functional(&path, &probes, LimitMetric::Norm, &Schedule::default()).unwrap();
            for (probe, report) in probes.iter().zip(&reports) {
                let closed = eval_norm_horofunction(&params, probe).unwrap();
                assert!(
                    (closed - report.last_value()).abs() <= 1e-9,
                    "{algebra}: closed {closed} vs limit {}",
                    report.last_value()
                );
            }
        }
    }
}

#[test]
fn variation_horofunction_matches_limit_on_frame_spans() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for algebra in kinds() {
        for _ in 0..4 {
            let params = random_params(&mut rng, algebra, BoundaryMode::Hilbert);
            let g = VariationHorofunction::new(params.clone()).unwrap();
            let probes: Vec<Element> = (0..3)
                .map(|_| frame_span_probe(&mut rng, &params, true))
                .collect();
            let path = LimitPath::Busemann(BusemannPath::new(params).unwrap());
            let reports =
                limit_functional(&path, &probes, LimitMetric::Variation, &Schedule::default())
                    .unwrap();
            for (probe, report) in probes.iter().zip(&reports) {
                let closed = g.eval(&TangentVector::new(probe.clone()).unwrap()).unwrap();
                assert!(
                    (closed - report.last_value()).abs() <= 1e-9,
                    "{algebra}: closed {closed} vs limit {}",
                    report.last_value()
                );
            }
        }
    }
}

#[test]
fn thompson_detour_matches_cost_limit() {
    // Same frame, same index sets, independent weights: the pairs share
    // their supports, so the detour distance is finite and must equal the
    // two-way detour-cost limit.  The prelimit is exact in t beyond the
    // largest weight; t = 8 keeps the cross-block rounding amplification
    // (~e^{2t}·ε for rotated frames) far below the comparison tolerance.
    let mut rng = ChaCha8Rng::seed_from_u64(53);
    for algebra in kinds() {
        for _ in 0..4 {
            let frame = random_frame(&mut rng, algebra);
            let (set_i, set_j) = random_split(&mut rng, algebra.rank(), BoundaryMode::Thompson);
            let make = |rng: &mut ChaCha8Rng| {
                let alpha = random_alpha(rng, &set_i, &set_j, BoundaryMode::Thompson);
                BoundaryParams::new(
                    frame.clone(),
                    set_i.clone(),
                    set_j.clone(),
                    alpha,
                    BoundaryMode::Thompson,
                )
                .unwrap()
            };
            let (pa, pb) = (make(&mut rng), make(&mut rng));
            let ha = exp_extension_thompson(&pa).unwrap();
            let hb = exp_extension_thompson(&pb).unwrap();
            let closed = detour_distance_thompson(&ha, &hb).unwrap();
            assert!(closed.is_finite());

            let t = 8.0;
            let forward = detour_cost_prelimit(
                &BusemannPath::new(pa.clone()).unwrap(),
                hb.pair(),
                t,
            )
            .unwrap();
            let backward = detour_cost_prelimit(
                &BusemannPath::new(pb.clone()).unwrap(),
                ha.pair(),
                t,
            )
            .unwrap();
            assert!(
                (closed - (forward + backward)).abs() <= 1e-7,
                "{algebra}: closed {closed} vs limit {}",
                forward + backward
            );
        }
    }
}

#[test]
fn variation_detour_matches_cost_limit() {
    // The normed-space detour cost H(g, g') = lim |ξᵗ| + g'(ξᵗ) is exact
    // once t dominates the weights; everything stays at scale t, so t = 30
    // is well-conditioned here.
    let mut rng = ChaCha8Rng::seed_from_u64(67);
    for algebra in kinds() {
        for _ in 0..4 {
            let frame = random_frame(&mut rng, algebra);
            let (set_i, set_j) = random_split(&mut rng, algebra.rank(), BoundaryMode::Hilbert);
            let make = |rng: &mut ChaCha8Rng| {
                let alpha = random_alpha(rng, &set_i, &set_j, BoundaryMode::Hilbert);
                let params = BoundaryParams::new(
                    frame.clone(),
                    set_i.clone(),
                    set_j.clone(),
                    alpha,
                    BoundaryMode::Hilbert,
                )
                .unwrap();
                VariationHorofunction::new(params).unwrap()
            };
            let (ga, gb) = (make(&mut rng), make(&mut rng));
            let closed = detour_distance_variation(&ga, &gb).unwrap();
            assert!(closed.is_finite());

            let t = 30.0;
            let cost = |from: &VariationHorofunction, to: &VariationHorofunction| {
                let xi = from.path_point(t).unwrap();
                xi.element().variation_seminorm().unwrap() + to.eval(&xi).unwrap()
            };
            let limit = cost(&ga, &gb) + cost(&gb, &ga);
            assert!(
                (closed - limit).abs() <= 1e-7,
                "{algebra}: closed {closed} vs limit {limit}"
            );
        }
    }
}

#[test]
fn detour_is_infinite_across_parts() {
    let mut rng = ChaCha8Rng::seed_from_u64(71);
    let algebra = AlgebraDescriptor::RealSymmetric { n: 3 };
    let frame = random_frame(&mut rng, algebra);
    let alpha_a = random_alpha(&mut rng, &[0], &[2], BoundaryMode::Thompson);
    let alpha_b = random_alpha(&mut rng, &[0, 1], &[2], BoundaryMode::Thompson);
    let pa = BoundaryParams::new(frame.clone(), vec![0], vec![2], alpha_a, BoundaryMode::Thompson)
        .unwrap();
    let pb =
        BoundaryParams::new(frame, vec![0, 1], vec![2], alpha_b, BoundaryMode::Thompson).unwrap();
    let ha = exp_extension_thompson(&pa).unwrap();
    let hb = exp_extension_thompson(&pb).unwrap();
    assert_eq!(detour_distance_thompson(&ha, &hb).unwrap(), f64::INFINITY);
}
