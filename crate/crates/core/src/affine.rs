//! Admissible-level arithmetic on a truncated window of affine real roots:
//! exact pairings against `alpha + n delta`, the lattice translation action,
//! and the window-checked identity `Delta^(lambda^_q) = t_{-mu}(Delta^(k L0))`.
//!
//! Affine roots are never materialized as an infinite set. Every statement
//! is quantified over `|n| <= N` with `N` at least `3q`, which exhibits the
//! periodic patterns `q` and `q / lacing` for three full periods.

use num_rational::Ratio;
use num_traits::Zero;

use crate::orbits::{case_for, CaseTag};
use crate::rootsys::{Rat, Root, RootSystem, Weight};
use crate::{Error, Result};

/// A weight of the affine algebra: finite part, coefficient of `Lambda_0`
/// (the level direction) and coefficient of `delta`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineWeight {
    pub finite: Weight,
    pub level: Rat,
    pub delta_coeff: Rat,
}

impl AffineWeight {
    pub fn new(finite: Weight, level: Rat, delta_coeff: Rat) -> Self {
        AffineWeight {
            finite,
            level,
            delta_coeff,
        }
    }
}

/// A real affine root `alpha + n delta`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffineRealRoot {
    pub finite_root: Root,
    pub n: i64,
}

impl AffineRealRoot {
    pub fn new(finite_root: Root, n: i64) -> Self {
        AffineRealRoot { finite_root, n }
    }

    /// Positive iff `n > 0`, or `n = 0` and the finite part is positive.
    pub fn is_positive(&self) -> bool {
        self.n > 0 || (self.n == 0 && self.finite_root.is_positive())
    }
}

/// An admissible level `k = -h^v + p/q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibleLevel {
    pub p: u64,
    pub q: u64,
    pub k: Rat,
}

impl AdmissibleLevel {
    pub fn new(rs: &RootSystem, p: u64, q: u64) -> Result<Self> {
        if !is_admissible_number(rs, p, q) {
            return Err(Error::NotAdmissible { p, q });
        }
        let k = Ratio::new(p as i64, q as i64) - Ratio::from_integer(rs.dual_coxeter_number() as i64);
        Ok(AdmissibleLevel { p, q, k })
    }
}

/// The admissibility condition on `p/q`: coprime, with `p >= h^v` when
/// `gcd(q, lacing) = 1` and `p >= h` otherwise.
pub fn is_admissible_number(rs: &RootSystem, p: u64, q: u64) -> bool {
    if p == 0 || q == 0 || num_integer::gcd(p, q) != 1 {
        return false;
    }
    let bound = if num_integer::gcd(q, rs.lacing()) == 1 {
        rs.dual_coxeter_number()
    } else {
        rs.coxeter_number()
    };
    p >= bound
}

/// `<w, (alpha + n delta)^v> = (2 / (alpha|alpha)) ((w_fin | alpha) + n k)`,
/// where `k` is the `Lambda_0` coefficient of `w`. The `delta` coefficient of
/// `w` never contributes because `delta` is isotropic and orthogonal to the
/// finite part.
pub fn affine_pairing(rs: &RootSystem, w: &AffineWeight, r: &AffineRealRoot) -> Rat {
    let sq = rs.root_square(&r.finite_root);
    let dot = rs.form_weight_root(&w.finite, &r.finite_root)
        + Ratio::from_integer(r.n) * w.level;
    Ratio::from_integer(2) * dot / sq
}

/// The translation `t_beta` applied to a real root: `alpha + n delta` maps to
/// `alpha + (n - (alpha | beta)) delta`. `beta` is given by its image in the
/// weight space and must pair integrally with every root.
pub fn translate(rs: &RootSystem, beta: &Weight, r: &AffineRealRoot) -> Result<AffineRealRoot> {
    let shift = rs.form_weight_root(beta, &r.finite_root);
    if !shift.is_integer() {
        return Err(Error::Unsupported(format!(
            "translation by a vector outside the coweight lattice (shift {})",
            shift
        )));
    }
    Ok(AffineRealRoot {
        finite_root: r.finite_root.clone(),
        n: r.n - shift.to_integer(),
    })
}

/// Check that a weight vector lies in the coweight lattice, i.e. pairs
/// integrally with every simple root under the invariant form.
pub fn in_coweight_lattice(rs: &RootSystem, beta: &Weight) -> bool {
    rs.positive_roots()
        .iter()
        .take(rs.rank())
        .all(|alpha| rs.form_weight_root(beta, alpha).is_integer())
}

/// Membership of `alpha + n delta` in `Delta^(w)`: the pairing is integral.
fn is_integral(rs: &RootSystem, w: &AffineWeight, r: &AffineRealRoot) -> bool {
    affine_pairing(rs, w, r).is_integer()
}

/// Report from the window-truncated verification of the translation
/// identity for `lambda^_q`.
#[derive(Debug, Clone)]
pub struct Prop24Report {
    pub p: u64,
    pub q: u64,
    pub case: CaseTag,
    pub window: i64,
    pub bezout: Vec<(i64, i64)>,
    pub roots_checked: usize,
    pub dominance_ok: bool,
    pub translation_ok: bool,
    pub closed_form_ok: bool,
    pub violations: Vec<String>,
}

impl Prop24Report {
    pub fn pass(&self) -> bool {
        self.dominance_ok && self.translation_ok && self.closed_form_ok
    }
}

/// Extended Euclid: returns `(g, x, y)` with `a x + b y = g = gcd(a, b)`.
fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a.rem_euclid(b));
        (g, y, x - (a / b) * y)
    }
}

/// Verify, over the window `|n| <= window`, that
/// `lambda^_q + rho^` is positive on positive real roots, that membership in
/// `Delta^(lambda^_q)` coincides with membership in the translate
/// `t_{-mu}(Delta^(k Lambda_0))` for two distinct Bezout choices of `mu`,
/// and that `Delta^(k Lambda_0)` matches its closed-form description.
pub fn verify_prop_2_4(rs: &RootSystem, p: u64, q: u64, window: i64) -> Result<Prop24Report> {
    if !is_admissible_number(rs, p, q) {
        return Err(Error::NotAdmissible { p, q });
    }
    if window < 3 * q as i64 {
        return Err(Error::Unsupported(format!(
            "window {} is smaller than 3q = {}",
            window,
            3 * q
        )));
    }
    let lacing = rs.lacing();
    let case = case_for(lacing, q);
    let level = Ratio::new(p as i64, q as i64); // Lambda_0 coefficient of w + rho^

    let inv_q = Ratio::new(1, q as i64);
    let shifted_finite = match case {
        CaseTag::Principal => rs.rho().scale(inv_q),
        CaseTag::Coprincipal => rs.rho_check().scale(inv_q),
        CaseTag::Extended => unreachable!(),
    };
    let target = AffineWeight::new(shifted_finite, level, Rat::zero());
    let vacuum = AffineWeight::new(rs.rho().clone(), level, Rat::zero());

    // Two Bezout solutions; independence of the choice is part of the claim.
    let (pi, qi) = (p as i64, q as i64);
    let mut bezout = Vec::new();
    let mus: Vec<Weight> = match case {
        CaseTag::Principal => {
            // c r p + d q = -1
            let rp = lacing as i64 * pi;
            let (g, x, _) = ext_gcd(rp, qi);
            assert_eq!(g, 1);
            let c0 = -x;
            let mut out = Vec::new();
            for c in [c0, c0 + qi] {
                let d = (-1 - c * rp) / qi;
                assert_eq!(c * rp + d * qi, -1);
                bezout.push((c, d));
                out.push(rs.rho().scale(Ratio::from_integer(c * lacing as i64)));
            }
            out
        }
        CaseTag::Coprincipal => {
            // c p - d q = -1
            let (g, x, _) = ext_gcd(pi, qi);
            assert_eq!(g, 1);
            let c0 = -x;
            let mut out = Vec::new();
            for c in [c0, c0 + qi] {
                let d = (c * pi + 1) / qi;
                assert_eq!(c * pi - d * qi, -1);
                bezout.push((c, d));
                out.push(rs.rho_check().scale(Ratio::from_integer(c)));
            }
            out
        }
        CaseTag::Extended => unreachable!(),
    };
    for mu in &mus {
        if !in_coweight_lattice(rs, mu) {
            return Err(Error::Internal("mu must lie in the coweight lattice".into()));
        }
    }

    let mut violations = Vec::new();
    let mut dominance_ok = true;
    let mut translation_ok = true;
    let mut closed_form_ok = true;
    let mut roots_checked = 0usize;

    for alpha in rs.roots() {
        let long = rs.is_long(alpha).unwrap();
        for n in -window..=window {
            let r = AffineRealRoot::new(alpha.clone(), n);
            roots_checked += 1;

            // (a) regular dominance on the positive window roots
            if r.is_positive() {
                let val = affine_pairing(rs, &target, &r);
                if val <= Rat::zero() {
                    dominance_ok = false;
                    if violations.len() < 8 {
                        violations.push(format!(
                            "pairing <= 0 at {} + {} delta: {}",
                            alpha, n, val
                        ));
                    }
                }
            }

            // (b) membership matches the translate, for each Bezout choice.
            // r lies in t_{-mu}(vacuum set) iff its preimage t_mu(r) lies in
            // the vacuum set itself.
            let in_target = is_integral(rs, &target, &r);
            for mu in &mus {
                let pre = translate(rs, mu, &r).expect("mu is in the coweight lattice");
                let in_translate = is_integral(rs, &vacuum, &pre);
                if in_target != in_translate {
                    translation_ok = false;
                    if violations.len() < 8 {
                        violations.push(format!(
                            "membership mismatch at {} + {} delta",
                            alpha, n
                        ));
                    }
                }
            }

            // (c) closed form of Delta^(k Lambda_0) on the window
            let in_vacuum = is_integral(rs, &vacuum, &r);
            let expected = match case {
                CaseTag::Principal => n.rem_euclid(qi) == 0,
                CaseTag::Coprincipal => {
                    if long {
                        n.rem_euclid(qi) == 0
                    } else {
                        n.rem_euclid(qi / lacing as i64) == 0
                    }
                }
                CaseTag::Extended => unreachable!(),
            };
            if in_vacuum != expected {
                closed_form_ok = false;
                if violations.len() < 8 {
                    violations.push(format!(
                        "vacuum integral set differs from closed form at {} + {} delta",
                        alpha, n
                    ));
                }
            }
        }
    }

    Ok(Prop24Report {
        p,
        q,
        case,
        window,
        bezout,
        roots_checked,
        dominance_ok,
        translation_ok,
        closed_form_ok,
        violations,
    })
}

/// Restriction of `lambda^_q` to the finite Cartan, for cross-module
/// consistency with `integral_roots::lambda_q`.
pub fn lambda_hat_restriction(rs: &RootSystem, p: u64, q: u64) -> Result<Weight> {
    if !is_admissible_number(rs, p, q) {
        return Err(Error::NotAdmissible { p, q });
    }
    let case = case_for(rs.lacing(), q);
    let inv_q = Ratio::new(1, q as i64);
    let shifted = match case {
        CaseTag::Principal => rs.rho().scale(inv_q),
        CaseTag::Coprincipal => rs.rho_check().scale(inv_q),
        CaseTag::Extended => unreachable!(),
    };
    Ok(shifted.sub(rs.rho()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::integral_roots;
    use crate::rootsys::{CartanType, Family};

    fn rs(f: Family, r: usize) -> RootSystem {
        RootSystem::build(CartanType::new(f, r).unwrap())
    }

    #[test]
    fn admissibility_examples() {
        let a1 = rs(Family::A, 1);
        assert!(is_admissible_number(&a1, 3, 2));
        let g2 = rs(Family::G, 2);
        assert!(!is_admissible_number(&g2, 3, 5)); // 3 < h^v = 4
        assert!(is_admissible_number(&g2, 6, 5));
        let b2 = rs(Family::B, 2);
        assert!(!is_admissible_number(&b2, 4, 2)); // not coprime
        assert!(is_admissible_number(&b2, 5, 2)); // 5 >= h = 4
        assert!(!is_admissible_number(&b2, 3, 2)); // 3 < h = 4
    }

    #[test]
    fn admissible_level_value() {
        let a1 = rs(Family::A, 1);
        let level = AdmissibleLevel::new(&a1, 3, 2).unwrap();
        // k = -h^v + p/q = -2 + 3/2 = -1/2
        assert_eq!(level.k, Ratio::new(-1, 2));
        assert!(AdmissibleLevel::new(&a1, 1, 2).is_err());
    }

    #[test]
    fn pairing_on_simple_roots() {
        // <lambda^_q + rho^, alpha + 0 delta> = 1/q on simple roots in the
        // principal case.
        let a2 = rs(Family::A, 2);
        let (p, q) = (4u64, 3u64);
        let w = AffineWeight::new(
            a2.rho().scale(Ratio::new(1, q as i64)),
            Ratio::new(p as i64, q as i64),
            Rat::zero(),
        );
        for alpha in a2.positive_roots().iter().take(2) {
            let r = AffineRealRoot::new(alpha.clone(), 0);
            assert_eq!(affine_pairing(&a2, &w, &r), Ratio::new(1, 3));
        }
        // at -theta + delta the pairing is (p - (h^v - 1)) / q > 0
        let r = AffineRealRoot::new(a2.theta().negated(), 1);
        assert_eq!(affine_pairing(&a2, &w, &r), Ratio::new(4 - 2, 3));
    }

    #[test]
    fn translate_by_zero_is_identity() {
        let b2 = rs(Family::B, 2);
        let zero = Weight::zero(2);
        for alpha in b2.roots() {
            for n in -3..=3 {
                let r = AffineRealRoot::new(alpha.clone(), n);
                assert_eq!(translate(&b2, &zero, &r).unwrap(), r);
            }
        }
    }

    #[test]
    fn translate_shifts_by_form_value() {
        let a2 = rs(Family::A, 2);
        // rho has (rho | alpha) = ht(alpha) for simply laced types
        let rho = a2.rho().clone();
        assert!(in_coweight_lattice(&a2, &rho));
        for alpha in a2.roots() {
            let r = AffineRealRoot::new(alpha.clone(), 0);
            let t = translate(&a2, &rho, &r).unwrap();
            assert_eq!(t.n, -alpha.height());
        }
    }

    #[test]
    fn prop24_small_cases() {
        for (f, rank, p, q) in [
            (Family::A, 1, 3u64, 2u64),
            (Family::B, 2, 5, 2),
            (Family::G, 2, 7, 3),
        ] {
            let sys = rs(f, rank);
            let report = verify_prop_2_4(&sys, p, q, 3 * q as i64 + 2).unwrap();
            assert!(report.pass(), "{:?}", report.violations);
            assert_eq!(report.bezout.len(), 2);
            assert_ne!(report.bezout[0], report.bezout[1]);
        }
    }

    #[test]
    fn prop24_rejects_inadmissible() {
        let f4 = rs(Family::F, 4);
        // q = 2 is coprincipal for F4, so p must reach h = 12
        assert!(matches!(
            verify_prop_2_4(&f4, 9, 2, 6),
            Err(Error::NotAdmissible { p: 9, q: 2 })
        ));
    }

    #[test]
    fn vacuum_closed_form_small_grid() {
        for sys in [rs(Family::A, 2), rs(Family::B, 2), rs(Family::G, 2)] {
            let h = sys.coxeter_number();
            let hv = sys.dual_coxeter_number();
            for q in 1..=8u64 {
                let bound = if num_integer::gcd(q, sys.lacing()) == 1 {
                    hv
                } else {
                    h
                };
                let p = (bound..).find(|p| num_integer::gcd(*p, q) == 1).unwrap();
                let report = verify_prop_2_4(&sys, p, q, 3 * q as i64).unwrap();
                assert!(report.pass(), "{} p={} q={}: {:?}", sys.cartan_type(), p, q, report.violations);
            }
        }
    }

    #[test]
    fn restriction_matches_lambda_q() {
        for (f, rank, p, q) in [
            (Family::A, 2, 4u64, 3u64),
            (Family::B, 2, 5, 2),
            (Family::C, 3, 7, 2),
        ] {
            let sys = rs(f, rank);
            let restricted = lambda_hat_restriction(&sys, p, q).unwrap();
            let case = case_for(sys.lacing(), q);
            let lq = integral_roots::lambda_q(&sys, q, case).unwrap();
            assert_eq!(&restricted, lq.weight());
        }
    }

    #[test]
    fn window_must_cover_three_periods() {
        let a1 = rs(Family::A, 1);
        assert!(verify_prop_2_4(&a1, 3, 2, 5).is_err());
        assert!(verify_prop_2_4(&a1, 3, 2, 6).is_ok());
    }

    mod translation_props {
        use super::*;
        use proptest::prelude::*;

        // integer combinations of lacing * rho and rho^v lie in the
        // coweight lattice for every type
        fn lattice_vector(sys: &RootSystem, a: i64, b: i64) -> Weight {
            let lacing = sys.lacing() as i64;
            sys.rho()
                .scale(Ratio::from_integer(a * lacing))
                .add(&sys.rho_check().scale(Ratio::from_integer(b)))
        }

        proptest! {
            #[test]
            fn translate_then_back_is_identity(
                a in -4i64..=4,
                b in -4i64..=4,
                n in -10i64..=10,
                root_idx in 0usize..12,
                ty in 0usize..3,
            ) {
                let sys = match ty {
                    0 => rs(Family::B, 2),
                    1 => rs(Family::G, 2),
                    _ => rs(Family::A, 2),
                };
                let beta = lattice_vector(&sys, a, b);
                prop_assume!(root_idx < sys.roots().len());
                let r = AffineRealRoot::new(sys.roots()[root_idx].clone(), n);
                let there = translate(&sys, &beta, &r).unwrap();
                let back = translate(
                    &sys,
                    &beta.scale(Ratio::from_integer(-1)),
                    &there,
                )
                .unwrap();
                prop_assert_eq!(back, r);
            }

            #[test]
            fn translation_preserves_positivity_for_large_n(
                a in -3i64..=3,
                b in -3i64..=3,
                root_idx in 0usize..12,
            ) {
                let sys = rs(Family::G, 2);
                let beta = lattice_vector(&sys, a, b);
                prop_assume!(root_idx < sys.roots().len());
                let alpha = sys.roots()[root_idx].clone();
                // past the largest possible shift, positivity is stable
                let bound: i64 = sys
                    .roots()
                    .iter()
                    .map(|r| {
                        let s = sys.form_weight_root(&beta, r);
                        s.to_integer().abs()
                    })
                    .max()
                    .unwrap();
                for n in bound + 1..bound + 4 {
                    let r = AffineRealRoot::new(alpha.clone(), n);
                    let t = translate(&sys, &beta, &r).unwrap();
                    prop_assert!(r.is_positive() && t.is_positive());
                }
            }
        }
    }
}
