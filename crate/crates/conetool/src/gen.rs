//! Seeded generators for random algebra elements, frames, and boundary
//! parameters, shared by the verification suites and the CLI.
//!
//! Everything is driven by `ChaCha8Rng` seeded from explicit `u64` values,
//! so a reported failure seed reproduces the trial exactly.

use std::collections::BTreeMap;

use cone_core::{AlgebraDescriptor, BoundaryMode, BoundaryParams, Element};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Desk-scale default algebra kinds: matrix ranks up to 8, spin dimension
/// up to 10.
pub fn default_algebras() -> Vec<AlgebraDescriptor> {
    vec![
        AlgebraDescriptor::RealSymmetric { n: 2 },
        AlgebraDescriptor::RealSymmetric { n: 3 },
        AlgebraDescriptor::RealSymmetric { n: 5 },
        AlgebraDescriptor::RealSymmetric { n: 8 },
        AlgebraDescriptor::ComplexHermitian { n: 2 },
        AlgebraDescriptor::ComplexHermitian { n: 3 },
        AlgebraDescriptor::SpinFactor { dim: 3 },
        AlgebraDescriptor::SpinFactor { dim: 6 },
        AlgebraDescriptor::SpinFactor { dim: 10 },
    ]
}

/// Parses an algebra restriction of the form `sym:3`, `herm:2`, `spin:6`.
pub fn parse_algebra(spec: &str) -> Result<AlgebraDescriptor, String> {
    let (kind, size) = spec
        .split_once(':')
        .ok_or_else(|| format!("expected kind:size, got `{spec}`"))?;
    let size: usize = size
        .parse()
        .map_err(|_| format!("invalid size in `{spec}`"))?;
    let made = match kind {
        "sym" => AlgebraDescriptor::real_symmetric(size),
        "herm" => AlgebraDescriptor::complex_hermitian(size),
        "spin" => AlgebraDescriptor::spin_factor(size),
        other => return Err(format!("unknown algebra kind `{other}`")),
    };
    made.map_err(|e| e.to_string())
}

/// Mixes the run seed, a suite index, and a trial index into one seed
/// (SplitMix64 finaliser).
pub fn trial_seed(seed: u64, suite: u64, trial: u64) -> u64 {
    let mut z = seed
        .wrapping_add(suite.wrapping_mul(0x9E3779B97F4A7C15))
        .wrapping_add(trial.wrapping_mul(0xBF58476D1CE4E5B9));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
    z ^ (z >> 31)
}

pub fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Coordinates uniform in [−1, 1].
pub fn random_element(rng: &mut ChaCha8Rng, algebra: AlgebraDescriptor) -> Element {
    let coords: Vec<f64> = (0..algebra.coord_len())
        .map(|_| rng.gen_range(-1.0..1.0))
        .collect();
    Element::new(algebra, coords).expect("in-range coordinates")
}

/// `exp` of a random element: always interior.
pub fn random_interior(rng: &mut ChaCha8Rng, algebra: AlgebraDescriptor) -> Element {
    random_element(rng, algebra).exp().expect("exp is total")
}

/// Re-derives a frame from integer-separated eigenvalues so the projectors
/// never suffer from accidentally clustered spectra.  Order is preserved.
fn clean_frame(seeded: &Element) -> Vec<Element> {
    let rank = seeded.algebra().rank();
    let dec = seeded.spectral_decompose().expect("decomposable");
    let mut spread = Element::zero(seeded.algebra()).expect("zero");
    for (k, p) in dec.frame().iter().enumerate() {
        spread = &spread + &p.scale((rank - k) as f64);
    }
    spread
        .spectral_decompose()
        .expect("decomposable")
        .frame()
        .to_vec()
}

/// A uniformly random Jordan frame (well separated, see `clean_frame`).
pub fn random_frame(rng: &mut ChaCha8Rng, algebra: AlgebraDescriptor) -> Vec<Element> {
    clean_frame(&random_element(rng, algebra))
}

/// Random disjoint index sets over `0..rank`, valid for the mode
/// (Thompson: union nonempty; Hilbert: both nonempty).
pub fn random_split(
    rng: &mut ChaCha8Rng,
    rank: usize,
    mode: BoundaryMode,
) -> (Vec<usize>, Vec<usize>) {
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

/// Weights uniform in [0, 2], renormalised for the mode (global minimum
/// zero for Thompson, per-set minima zero for Hilbert).
pub fn random_alpha(
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

/// A fully random parameter set for the mode.
pub fn random_params(
    rng: &mut ChaCha8Rng,
    algebra: AlgebraDescriptor,
    mode: BoundaryMode,
) -> BoundaryParams {
    let frame = random_frame(rng, algebra);
    let (set_i, set_j) = random_split(rng, algebra.rank(), mode);
    let alpha = random_alpha(rng, &set_i, &set_j, mode);
    BoundaryParams::new(frame, set_i, set_j, alpha, mode).expect("generated params are valid")
}

/// An element in the span of the parameter frame with coefficients in
/// [−2, 2], optionally projected to the traceless subspace (which stays in
/// the span).
pub fn frame_span(rng: &mut ChaCha8Rng, params: &BoundaryParams, traceless: bool) -> Element {
    let mut acc = Element::zero(params.algebra()).expect("zero");
    for p in params.frame() {
        acc = &acc + &p.scale(rng.gen_range(-2.0..2.0));
    }
    if traceless {
        let rank = params.algebra().rank() as f64;
        let shift = acc.trace() / rank;
        acc = &acc - &Element::unit(params.algebra()).expect("unit").scale(shift);
    }
    acc
}

/// A family of parameter sets sharing one frame and one index split but
/// with independent weights: all in the same part, detour-finite.
pub fn same_part_family(
    rng: &mut ChaCha8Rng,
    algebra: AlgebraDescriptor,
    mode: BoundaryMode,
    count: usize,
) -> Vec<BoundaryParams> {
    let frame = random_frame(rng, algebra);
    let (set_i, set_j) = random_split(rng, algebra.rank(), mode);
    (0..count)
        .map(|_| {
            let alpha = random_alpha(rng, &set_i, &set_j, mode);
            BoundaryParams::new(frame.clone(), set_i.clone(), set_j.clone(), alpha, mode)
                .expect("generated params are valid")
        })
        .collect()
}

/// Two parameter sets with *different frames* whose support idempotents
/// nevertheless coincide: the second frame diagonalises a random element
/// built blockwise from the first frame's supports, shifted apart so its
/// spectrum splits into an I-cluster, a complement cluster, and a
/// J-cluster.
pub fn cluster_same_part_pair(
    rng: &mut ChaCha8Rng,
    algebra: AlgebraDescriptor,
    mode: BoundaryMode,
) -> (BoundaryParams, BoundaryParams) {
    let frame = random_frame(rng, algebra);
    let rank = algebra.rank();
    let (set_i, set_j) = random_split(rng, rank, mode);
    let alpha = random_alpha(rng, &set_i, &set_j, mode);
    let first = BoundaryParams::new(
        frame.clone(),
        set_i.clone(),
        set_j.clone(),
        alpha,
        mode,
    )
    .expect("generated params are valid");

    let indexed_sum = |set: &[usize]| {
        let mut acc = Element::zero(algebra).expect("zero");
        for &k in set {
            acc = &acc + &frame[k];
        }
        acc
    };
    let p_i = indexed_sum(&set_i);
    let p_j = indexed_sum(&set_j);
    let unit = Element::unit(algebra).expect("unit");
    let p_c = &(&unit - &p_i) - &p_j;
    // The shift separating the three clusters must dominate the largest
    // block magnitude, or the spectra could overlap and the rebuilt frame
    // would no longer respect the block structure.
    let compressed: Vec<Element> = [&p_i, &p_c, &p_j]
        .iter()
        .map(|p| {
            let g = random_element(rng, algebra);
            p.quadratic_rep(&g).expect("same algebra")
        })
        .collect();
    let spread = compressed
        .iter()
        .map(|c| c.order_unit_norm().expect("finite coordinates"))
        .fold(0.0f64, f64::max);
    let shift = 2.0 + 2.0 * spread;
    let mut blocks = Element::zero(algebra).expect("zero");
    for (c, p, offset) in [
        (&compressed[0], &p_i, shift),
        (&compressed[1], &p_c, 0.0),
        (&compressed[2], &p_j, -shift),
    ] {
        blocks = &(&blocks + c) + &p.scale(offset);
    }
    let frame2 = clean_frame(&blocks);
    let set_i2: Vec<usize> = (0..set_i.len()).collect();
    let set_j2: Vec<usize> = (rank - set_j.len()..rank).collect();
    let alpha2 = random_alpha(rng, &set_i2, &set_j2, mode);
    let second = BoundaryParams::new(frame2, set_i2, set_j2, alpha2, mode)
        .expect("generated params are valid");
    (first, second)
}

/// Two parameter sets on one frame whose supports provably differ (an
/// index moved between the sets), so the detour distance must be `+∞`.
pub fn mismatched_pair(
    rng: &mut ChaCha8Rng,
    algebra: AlgebraDescriptor,
    mode: BoundaryMode,
) -> (BoundaryParams, BoundaryParams) {
    let frame = random_frame(rng, algebra);
    let rank = algebra.rank();
    let (set_i, set_j) = random_split(rng, rank, mode);
    let (set_i2, set_j2) = loop {
        let candidate = random_split(rng, rank, mode);
        if candidate != (set_i.clone(), set_j.clone()) {
            break candidate;
        }
    };
    let alpha = random_alpha(rng, &set_i, &set_j, mode);
    let alpha2 = random_alpha(rng, &set_i2, &set_j2, mode);
    let first = BoundaryParams::new(frame.clone(), set_i, set_j, alpha, mode)
        .expect("generated params are valid");
    let second = BoundaryParams::new(frame, set_i2, set_j2, alpha2, mode)
        .expect("generated params are valid");
    (first, second)
}

/// Embeds a 2×2 rotation-block idempotent pair at coordinate rows `(r, s)`
/// of a matrix algebra: `q₁ = R θ`-rotated `E_rr`, `q₂` its complement in
/// the block.  All entries outside the block are exact zeros.
fn rotated_block_idempotents(
    algebra: AlgebraDescriptor,
    r: usize,
    s: usize,
    theta: f64,
    phase: f64,
) -> (Element, Element) {
    let (c, sn) = (theta.cos(), theta.sin());
    match algebra {
        AlgebraDescriptor::RealSymmetric { n } => {
            let mut q1 = vec![0.0; n * n];
            let mut q2 = vec![0.0; n * n];
            q1[r * n + r] = c * c;
            q1[s * n + s] = sn * sn;
            q1[r * n + s] = c * sn;
            q1[s * n + r] = c * sn;
            q2[r * n + r] = sn * sn;
            q2[s * n + s] = c * c;
            q2[r * n + s] = -c * sn;
            q2[s * n + r] = -c * sn;
            (
                Element::new(algebra, q1).expect("valid coords"),
                Element::new(algebra, q2).expect("valid coords"),
            )
        }
        AlgebraDescriptor::ComplexHermitian { n } => {
            let at = |i: usize, j: usize| 2 * (i * n + j);
            let mut q1 = vec![0.0; 2 * n * n];
            let mut q2 = vec![0.0; 2 * n * n];
            let (pr, pi) = (phase.cos(), phase.sin());
            q1[at(r, r)] = c * c;
            q1[at(s, s)] = sn * sn;
            q1[at(r, s)] = c * sn * pr;
            q1[at(r, s) + 1] = c * sn * pi;
            q1[at(s, r)] = c * sn * pr;
            q1[at(s, r) + 1] = -c * sn * pi;
            q2[at(r, r)] = sn * sn;
            q2[at(s, s)] = c * c;
            q2[at(r, s)] = -c * sn * pr;
            q2[at(r, s) + 1] = -c * sn * pi;
            q2[at(s, r)] = -c * sn * pr;
            q2[at(s, r) + 1] = c * sn * pi;
            (
                Element::new(algebra, q1).expect("valid coords"),
                Element::new(algebra, q2).expect("valid coords"),
            )
        }
        AlgebraDescriptor::SpinFactor { .. } => unreachable!("matrix kinds only"),
    }
}

/// The standard coordinate frame (diagonal matrix units, or the spin frame
/// of a given unit direction).
fn standard_frame(algebra: AlgebraDescriptor, direction: &[f64]) -> Vec<Element> {
    match algebra {
        AlgebraDescriptor::RealSymmetric { n } => (0..n)
            .map(|k| {
                let mut c = vec![0.0; n * n];
                c[k * n + k] = 1.0;
                Element::new(algebra, c).expect("valid coords")
            })
            .collect(),
        AlgebraDescriptor::ComplexHermitian { n } => (0..n)
            .map(|k| {
                let mut c = vec![0.0; 2 * n * n];
                c[2 * (k * n + k)] = 1.0;
                Element::new(algebra, c).expect("valid coords")
            })
            .collect(),
        AlgebraDescriptor::SpinFactor { dim } => {
            let norm: f64 = direction.iter().map(|v| v * v).sum::<f64>().sqrt();
            let make = |sign: f64| {
                let mut c = vec![0.5; 1];
                c.extend(direction.iter().map(|v| sign * 0.5 * v / norm));
                Element::new(AlgebraDescriptor::SpinFactor { dim }, c).expect("valid coords")
            };
            vec![make(1.0), make(-1.0)]
        }
    }
}

/// A same-part Thompson pair whose Peirce blocks are aligned with the
/// coordinate axes: the first set lives on the standard diagonal frame,
/// the second rotates the frame *within* the blocks (so its pair elements
/// have exact zeros outside them).  This alignment is what makes the
/// detour-cost prelimit numerically meaningful at large `t` — see
/// `cone_core::limits::detour_cost_prelimit`.
pub fn aligned_same_part_pair(
    rng: &mut ChaCha8Rng,
    algebra: AlgebraDescriptor,
) -> (BoundaryParams, BoundaryParams) {
    let mode = BoundaryMode::Thompson;
    match algebra {
        AlgebraDescriptor::SpinFactor { dim } => {
            let direction: Vec<f64> = (0..dim - 1).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let frame = standard_frame(algebra, &direction);
            let (set_i, set_j) = (vec![0], vec![1]);
            let alpha = random_alpha(rng, &set_i, &set_j, mode);
            let alpha2 = random_alpha(rng, &set_i, &set_j, mode);
            let first = BoundaryParams::new(
                frame.clone(),
                set_i.clone(),
                set_j.clone(),
                alpha,
                mode,
            )
            .expect("generated params are valid");
            let second = BoundaryParams::new(frame, set_i, set_j, alpha2, mode)
                .expect("generated params are valid");
            (first, second)
        }
        _ => {
            let n = algebra.rank();
            let frame = standard_frame(algebra, &[]);
            let (set_i, set_j) = if n >= 3 {
                (vec![0, 1], vec![2])
            } else {
                (vec![0], vec![1])
            };
            let alpha = random_alpha(rng, &set_i, &set_j, mode);
            let first = BoundaryParams::new(
                frame.clone(),
                set_i.clone(),
                set_j.clone(),
                alpha,
                mode,
            )
            .expect("generated params are valid");
            let mut frame2 = frame;
            if n >= 3 {
                let (q1, q2) = rotated_block_idempotents(
                    algebra,
                    0,
                    1,
                    rng.gen_range(0.0..std::f64::consts::PI),
                    rng.gen_range(0.0..std::f64::consts::TAU),
                );
                frame2[0] = q1;
                frame2[1] = q2;
            }
            let alpha2 = random_alpha(rng, &set_i, &set_j, mode);
            let second = BoundaryParams::new(frame2, set_i, set_j, alpha2, mode)
                .expect("generated params are valid");
            (first, second)
        }
    }
}

/// Two representations of *the same* boundary point: a block of equal
/// weights inside `I` is spanned by two different frames (rotated within
/// the block), which must not change the induced horofunction.
pub fn rotated_twin_params(
    rng: &mut ChaCha8Rng,
    algebra: AlgebraDescriptor,
    mode: BoundaryMode,
) -> (BoundaryParams, BoundaryParams) {
    match algebra {
        AlgebraDescriptor::SpinFactor { dim } => {
            // A full equal-weight block: y = e^{-α}·u regardless of the
            // frame direction.  Hilbert mode needs both sets nonempty, so
            // this construction is Thompson-only for spin factors.
            let da: Vec<f64> = (0..dim - 1).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let db: Vec<f64> = (0..dim - 1).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let (set_i, set_j) = (vec![0usize, 1], Vec::new());
            let alpha: BTreeMap<usize, f64> = [(0, 0.0), (1, 0.0)].into_iter().collect();
            let first = BoundaryParams::new(
                standard_frame(algebra, &da),
                set_i.clone(),
                set_j.clone(),
                alpha.clone(),
                BoundaryMode::Thompson,
            )
            .expect("generated params are valid");
            let second = BoundaryParams::new(
                standard_frame(algebra, &db),
                set_i,
                set_j,
                alpha,
                BoundaryMode::Thompson,
            )
            .expect("generated params are valid");
            (first, second)
        }
        _ => {
            let n = algebra.rank();
            assert!(n >= 3, "matrix twins need rank ≥ 3");
            let frame = standard_frame(algebra, &[]);
            let (set_i, set_j) = (vec![0, 1], vec![n - 1]);
            // Equal weights on the rotated block; mode normalisation:
            // Thompson wants the global minimum at zero, Hilbert wants
            // both per-set minima at zero.
            let (shared, tail) = match mode {
                BoundaryMode::Thompson => {
                    let a: f64 = rng.gen_range(0.0..1.5);
                    let b: f64 = rng.gen_range(0.0..1.5);
                    let m = a.min(b);
                    (a - m, b - m)
                }
                BoundaryMode::Hilbert => (0.0, 0.0),
            };
            let alpha: BTreeMap<usize, f64> =
                [(0, shared), (1, shared), (n - 1, tail)].into_iter().collect();
            let first = BoundaryParams::new(
                frame.clone(),
                set_i.clone(),
                set_j.clone(),
                alpha.clone(),
                mode,
            )
            .expect("generated params are valid");
            let mut frame2 = frame;
            let (q1, q2) = rotated_block_idempotents(
                algebra,
                0,
                1,
                rng.gen_range(0.0..std::f64::consts::PI),
                rng.gen_range(0.0..std::f64::consts::TAU),
            );
            frame2[0] = q1;
            frame2[1] = q2;
            let second = BoundaryParams::new(frame2, set_i, set_j, alpha, mode)
                .expect("generated params are valid");
            (first, second)
        }
    }
}

/// Independent quadratic-representation oracle: the literal matrix product
/// `x y x` for matrix algebras, `2⟨x, y⟩x − det(x)·(s, −w)` for spin.
pub fn quadratic_rep_oracle(x: &Element, y: &Element) -> Vec<f64> {
    let c = x.coords();
    let d = y.coords();
    match x.algebra() {
        AlgebraDescriptor::RealSymmetric { n } => {
            let mul = |a: &[f64], b: &[f64]| -> Vec<f64> {
                let mut out = vec![0.0; n * n];
                for i in 0..n {
                    for k in 0..n {
                        let aik = a[i * n + k];
                        for j in 0..n {
                            out[i * n + j] += aik * b[k * n + j];
                        }
                    }
                }
                out
            };
            mul(&mul(c, d), c)
        }
        AlgebraDescriptor::ComplexHermitian { n } => {
            let mul = |a: &[f64], b: &[f64]| -> Vec<f64> {
                let mut out = vec![0.0; 2 * n * n];
                for i in 0..n {
                    for k in 0..n {
                        let (ar, ai) = (a[2 * (i * n + k)], a[2 * (i * n + k) + 1]);
                        for j in 0..n {
                            let (br, bi) = (b[2 * (k * n + j)], b[2 * (k * n + j) + 1]);
                            out[2 * (i * n + j)] += ar * br - ai * bi;
                            out[2 * (i * n + j) + 1] += ar * bi + ai * br;
                        }
                    }
                }
                out
            };
            mul(&mul(c, d), c)
        }
        AlgebraDescriptor::SpinFactor { .. } => {
            let dot: f64 = c.iter().zip(d).map(|(a, b)| a * b).sum();
            let det = c[0] * c[0] - c[1..].iter().map(|v| v * v).sum::<f64>();
            let mut out: Vec<f64> = c.iter().map(|v| 2.0 * dot * v).collect();
            out[0] -= det * d[0];
            for (o, w) in out[1..].iter_mut().zip(&d[1..]) {
                *o += det * w;
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use cone_core::thompson::{detour_distance_thompson, exp_extension_thompson, same_part_thompson};

    #[test]
    fn parse_algebra_specs() {
        assert_eq!(
            parse_algebra("sym:3").unwrap(),
            AlgebraDescriptor::RealSymmetric { n: 3 }
        );
        assert_eq!(
            parse_algebra("spin:6").unwrap(),
            AlgebraDescriptor::SpinFactor { dim: 6 }
        );
        assert!(parse_algebra("sym").is_err());
        assert!(parse_algebra("quaternion:3").is_err());
        assert!(parse_algebra("sym:0").is_err());
    }

    #[test]
    fn trial_seed_disperses() {
        let a = trial_seed(42, 0, 0);
        let b = trial_seed(42, 0, 1);
        let c = trial_seed(42, 1, 0);
        let d = trial_seed(43, 0, 0);
        assert!(a != b && a != c && a != d && b != c);
        assert_eq!(a, trial_seed(42, 0, 0));
    }

    #[test]
    fn generated_structures_are_valid() {
        let mut rng = rng_for(7);
        for algebra in default_algebras() {
            let frame = random_frame(&mut rng, algebra);
            assert_eq!(frame.len(), algebra.rank());
            for mode in [BoundaryMode::Thompson, BoundaryMode::Hilbert] {
                let params = random_params(&mut rng, algebra, mode);
                assert_eq!(params.mode(), mode);
                let span = frame_span(&mut rng, &params, true);
                assert!(span.trace().abs() < 1e-9);
            }
        }
    }

    #[test]
    fn constructed_pairs_have_the_claimed_part_relation() {
        let mut rng = rng_for(11);
        let algebra = AlgebraDescriptor::RealSymmetric { n: 5 };
        let (a, b) = cluster_same_part_pair(&mut rng, algebra, BoundaryMode::Thompson);
        let (ha, hb) = (
            exp_extension_thompson(&a).unwrap(),
            exp_extension_thompson(&b).unwrap(),
        );
        assert!(same_part_thompson(&ha, &hb).unwrap());
        assert!(detour_distance_thompson(&ha, &hb).unwrap().is_finite());

        let (c, d) = mismatched_pair(&mut rng, algebra, BoundaryMode::Thompson);
        let (hc, hd) = (
            exp_extension_thompson(&c).unwrap(),
            exp_extension_thompson(&d).unwrap(),
        );
        assert!(!same_part_thompson(&hc, &hd).unwrap());
        assert!(detour_distance_thompson(&hc, &hd).unwrap().is_infinite());

        let (e, f) = aligned_same_part_pair(&mut rng, algebra);
        let (he, hf) = (
            exp_extension_thompson(&e).unwrap(),
            exp_extension_thompson(&f).unwrap(),
        );
        assert!(same_part_thompson(&he, &hf).unwrap());
    }

    #[test]
    fn twins_represent_the_same_boundary_point() {
        let mut rng = rng_for(13);
        for algebra in [
            AlgebraDescriptor::RealSymmetric { n: 4 },
            AlgebraDescriptor::ComplexHermitian { n: 3 },
        ] {
            let (a, b) = rotated_twin_params(&mut rng, algebra, BoundaryMode::Thompson);
            let (pa, pb) = (a.to_pair().unwrap(), b.to_pair().unwrap());
            assert!(
                (pa.y().element() - pb.y().element()).norm_inner() < 1e-12,
                "y components differ"
            );
            assert!((pa.z().element() - pb.z().element()).norm_inner() < 1e-12);
        }
        let (a, b) = rotated_twin_params(
            &mut rng,
            AlgebraDescriptor::SpinFactor { dim: 5 },
            BoundaryMode::Thompson,
        );
        let (pa, pb) = (a.to_pair().unwrap(), b.to_pair().unwrap());
        assert!((pa.y().element() - pb.y().element()).norm_inner() < 1e-12);
    }
}
