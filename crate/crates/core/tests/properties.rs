//! Property-based invariants for the algebra kernel and the two Finsler
//! distances, checked against coordinate-level oracles that do not go
//! through the library's own Jordan-product code path.

use cone_core::order::{hilbert_distance, lower_gauge, thompson_distance, upper_gauge};
use cone_core::{AlgebraDescriptor, ConePoint, Element};
use proptest::prelude::*;

fn algebras() -> Vec<AlgebraDescriptor> {
    vec![
        AlgebraDescriptor::RealSymmetric { n: 2 },
        AlgebraDescriptor::RealSymmetric { n: 3 },
        AlgebraDescriptor::ComplexHermitian { n: 2 },
        AlgebraDescriptor::SpinFactor { dim: 3 },
        AlgebraDescriptor::SpinFactor { dim: 5 },
    ]
}

fn element_in(algebra: AlgebraDescriptor) -> impl Strategy<Value = Element> {
    proptest::collection::vec(-1.0..1.0f64, algebra.coord_len())
        .prop_map(move |c| Element::new(algebra, c).expect("in-range coordinates"))
}

fn element_pair() -> impl Strategy<Value = (Element, Element)> {
    proptest::sample::select(algebras())
        .prop_flat_map(|a| (element_in(a), element_in(a)))
}

fn element_triple() -> impl Strategy<Value = (Element, Element, Element)> {
    proptest::sample::select(algebras())
        .prop_flat_map(|a| (element_in(a), element_in(a), element_in(a)))
}

/// Independent quadratic-representation oracle: the literal matrix product
/// `x y x` for the matrix algebras, the closed form
/// `2⟨x, y⟩x − det(x)·(s, −w)` for spin factors.
fn quadratic_rep_oracle(x: &Element, y: &Element) -> Vec<f64> {
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
            // Interleaved (re, im) row-major entries.
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

fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn jordan_identity_holds((x, y) in element_pair()) {
        // x² ∘ (x ∘ y) = x ∘ (x² ∘ y), the defining identity.
        let x2 = x.jordan_product(&x).unwrap();
        let lhs = x2.jordan_product(&x.jordan_product(&y).unwrap()).unwrap();
        let rhs = x.jordan_product(&x2.jordan_product(&y).unwrap()).unwrap();
        let scale = (1.0 + x.norm_inner()).powi(3) * (1.0 + y.norm_inner());
        prop_assert!((&lhs - &rhs).norm_inner() <= 1e-12 * scale);
    }

    #[test]
    fn jordan_product_commutes((x, y) in element_pair()) {
        let xy = x.jordan_product(&y).unwrap();
        let yx = y.jordan_product(&x).unwrap();
        let scale = (1.0 + x.norm_inner()) * (1.0 + y.norm_inner());
        prop_assert!((&xy - &yx).norm_inner() <= 1e-13 * scale);
    }

    #[test]
    fn quadratic_rep_matches_oracle((x, y) in element_pair()) {
        let via_jordan = x.quadratic_rep(&y).unwrap();
        let direct = quadratic_rep_oracle(&x, &y);
        let scale = (1.0 + x.max_abs_coord()).powi(2) * (1.0 + y.max_abs_coord());
        prop_assert!(max_abs_diff(via_jordan.coords(), &direct) <= 1e-12 * scale);
    }

    #[test]
    fn spectral_reconstruction_is_faithful((x, _) in element_pair()) {
        let dec = x.spectral_decompose().unwrap();
        // Eigenvalues are sorted descending and reassemble the element.
        prop_assert!(dec.eigenvalues().windows(2).all(|w| w[0] >= w[1]));
        let rebuilt = dec.reconstruct();
        prop_assert!((&rebuilt - &x).norm_inner() <= 1e-12 * (1.0 + x.norm_inner()));
        // The frame is complete and consists of idempotents.
        let mut sum = Element::zero(x.algebra()).unwrap();
        for p in dec.frame() {
            let squared = p.jordan_product(p).unwrap();
            prop_assert!((&squared - p).norm_inner() <= 1e-10);
            sum = &sum + p;
        }
        let unit = Element::unit(x.algebra()).unwrap();
        prop_assert!((&sum - &unit).norm_inner() <= 1e-10);
    }

    #[test]
    fn element_json_round_trips((x, _) in element_pair()) {
        let text = serde_json::to_string(&x).unwrap();
        let back: Element = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back.algebra(), x.algebra());
        prop_assert_eq!(back.coords(), x.coords());
    }

    #[test]
    fn distances_satisfy_metric_axioms((a, b, c) in element_triple()) {
        // exp maps arbitrary elements onto interior points.
        let pa = ConePoint::interior(a.exp().unwrap()).unwrap();
        let pb = ConePoint::interior(b.exp().unwrap()).unwrap();
        let pc = ConePoint::interior(c.exp().unwrap()).unwrap();
        for dist in [thompson_distance, hilbert_distance] {
            let dab = dist(&pa, &pb).unwrap();
            let dba = dist(&pb, &pa).unwrap();
            let dac = dist(&pa, &pc).unwrap();
            let dcb = dist(&pc, &pb).unwrap();
            prop_assert!(dab >= 0.0);
            prop_assert!((dab - dba).abs() <= 1e-10 * (1.0 + dab));
            prop_assert!(dab <= dac + dcb + 1e-9);
        }
    }

    #[test]
    fn gauges_are_dual((a, b) in element_pair()) {
        let x = a.exp().unwrap();
        let y = ConePoint::interior(b.exp().unwrap()).unwrap();
        let xp = ConePoint::interior(x.clone()).unwrap();
        // m(x/y) · M(y/x) = 1.
        let m = lower_gauge(&x, &y).unwrap();
        let big_m = upper_gauge(y.element(), &xp).unwrap();
        prop_assert!((m * big_m - 1.0).abs() <= 1e-9 * (1.0 + big_m));
    }

    #[test]
    fn hilbert_distance_is_projective((a, b) in element_pair()) {
        let x = ConePoint::interior(a.exp().unwrap()).unwrap();
        let y = ConePoint::interior(b.exp().unwrap()).unwrap();
        let scaled = ConePoint::interior(x.element().scale(7.5)).unwrap();
        let d = hilbert_distance(&x, &y).unwrap();
        let ds = hilbert_distance(&scaled, &y).unwrap();
        prop_assert!((d - ds).abs() <= 1e-9 * (1.0 + d));
    }

    #[test]
    fn exp_is_an_isometry_on_frame_spans((w, _) in element_pair()) {
        // Two elements in the span of one Jordan frame: the Thompson
        // distance of their exponentials is the order-unit distance of the
        // exponents.
        let dec = w.spectral_decompose().unwrap();
        let rank = w.algebra().rank();
        let coeff_a: Vec<f64> = (0..rank).map(|i| ((i as f64) * 0.7).sin()).collect();
        let coeff_b: Vec<f64> = (0..rank).map(|i| ((i as f64) * 1.3).cos()).collect();
        let span = |coeff: &[f64]| {
            let mut acc = Element::zero(w.algebra()).unwrap();
            for (c, p) in coeff.iter().zip(dec.frame()) {
                acc = &acc + &p.scale(*c);
            }
            acc
        };
        let (x, y) = (span(&coeff_a), span(&coeff_b));
        let expected: f64 = coeff_a
            .iter()
            .zip(&coeff_b)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        let ex = ConePoint::interior(x.exp().unwrap()).unwrap();
        let ey = ConePoint::interior(y.exp().unwrap()).unwrap();
        let d = thompson_distance(&ex, &ey).unwrap();
        prop_assert!((d - expected).abs() <= 1e-9);
    }
}
