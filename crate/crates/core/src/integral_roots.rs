//! The weights `lambda_q` and the size of their integral root systems,
//! computed two independent ways: directly from exact coroot pairings, and
//! through height-divisibility counts in the appropriate root system.

use num_rational::Ratio;
use num_traits::Zero;

use crate::orbits::CaseTag;
use crate::rootsys::{Rat, RootSystem, Weight};
use crate::{Error, Result};

/// `lambda_q = rho/q - rho` (principal, and extended) or `rho^v/q - rho`
/// (coprincipal), with `lambda_q + rho` regular dominant by construction.
#[derive(Debug, Clone)]
pub struct LambdaQ {
    pub q: u64,
    pub case: CaseTag,
    weight: Weight,
}

impl LambdaQ {
    pub fn weight(&self) -> &Weight {
        &self.weight
    }

    /// `lambda_q + rho`, the shifted weight all pairings use.
    pub fn shifted(&self, rs: &RootSystem) -> Weight {
        self.weight.add(rs.rho())
    }
}

/// Build `lambda_q` and check regular dominance of `lambda_q + rho`.
pub fn lambda_q(rs: &RootSystem, q: u64, case: CaseTag) -> Result<LambdaQ> {
    if q == 0 {
        return Err(Error::Unsupported("q must be positive".into()));
    }
    let lacing = rs.lacing();
    let coprime = num_integer::gcd(q, lacing) == 1;
    match case {
        CaseTag::Principal if !coprime => {
            return Err(Error::Unsupported(format!(
                "q = {} is not coprime to the lacing number of {}",
                q,
                rs.cartan_type()
            )))
        }
        CaseTag::Coprincipal if coprime => {
            return Err(Error::Unsupported(format!(
                "q = {} is coprime to the lacing number of {}",
                q,
                rs.cartan_type()
            )))
        }
        CaseTag::Extended if coprime => {
            return Err(Error::Unsupported(
                "extended weights require q not coprime to the lacing number".into(),
            ))
        }
        _ => {}
    }

    let inv_q = Ratio::new(1, q as i64);
    let shifted = match case {
        CaseTag::Principal | CaseTag::Extended => rs.rho().scale(inv_q),
        CaseTag::Coprincipal => rs.rho_check().scale(inv_q),
    };
    let weight = shifted.sub(rs.rho());

    for alpha in rs.positive_roots() {
        let p = rs.pairing(&shifted, alpha);
        if p <= Rat::zero() {
            return Err(Error::Internal(format!(
                "lambda_q + rho is not regular dominant at {} (pairing {})",
                alpha, p
            )));
        }
    }
    Ok(LambdaQ { q, case, weight })
}

/// `#{alpha : <lambda_q + rho, alpha^v> is an integer}` by direct rational
/// pairing over the full root set.
pub fn integral_count_direct(rs: &RootSystem, lq: &LambdaQ) -> i64 {
    let shifted = lq.shifted(rs);
    rs.roots()
        .iter()
        .filter(|alpha| rs.pairing(&shifted, alpha).is_integer())
        .count() as i64
}

/// The same count through height divisibility: in the principal (and
/// extended) case `#{alpha : q | ht(alpha^v)}` with heights taken in the
/// Langlands dual system, in the coprincipal case long roots at `q | ht` and
/// short roots at `(q / lacing) | ht`.
pub fn integral_count_heights(rs: &RootSystem, q: u64, case: CaseTag) -> i64 {
    let dual = RootSystem::build(rs.cartan_type().langlands_dual());
    integral_count_heights_with(rs, &dual, q, case)
}

/// Same as [`integral_count_heights`] with a prebuilt dual system.
pub fn integral_count_heights_with(
    rs: &RootSystem,
    dual: &RootSystem,
    q: u64,
    case: CaseTag,
) -> i64 {
    debug_assert_eq!(dual.cartan_type(), rs.cartan_type().langlands_dual());
    match case {
        CaseTag::Principal | CaseTag::Extended => dual
            .roots()
            .iter()
            .filter(|r| r.height().rem_euclid(q as i64) == 0)
            .count() as i64,
        CaseTag::Coprincipal => {
            let lacing = rs.lacing();
            assert_eq!(q % lacing, 0);
            let short_mod = (q / lacing) as i64;
            rs.roots()
                .iter()
                .filter(|r| {
                    let h = r.height();
                    if rs.is_long(r).unwrap() {
                        h.rem_euclid(q as i64) == 0
                    } else {
                        h.rem_euclid(short_mod) == 0
                    }
                })
                .count() as i64
        }
    }
}

/// `|Delta(lambda_q)|` with both computation paths run and compared.
pub fn integral_count(rs: &RootSystem, lq: &LambdaQ) -> Result<i64> {
    let direct = integral_count_direct(rs, lq);
    let via_heights = integral_count_heights(rs, lq.q, lq.case);
    if direct != via_heights {
        return Err(Error::Internal(format!(
            "integral-root paths disagree for {} q={} ({}): direct {}, heights {}",
            rs.cartan_type(),
            lq.q,
            lq.case,
            direct,
            via_heights
        )));
    }
    Ok(direct)
}

/// `dim Var(J_{lambda_q}) = dim N - |Delta(lambda_q)|` by Joseph's formula,
/// valid since `lambda_q + rho` is regular dominant.
pub fn var_dim_joseph(rs: &RootSystem, q: u64, case: CaseTag) -> Result<i64> {
    let lq = lambda_q(rs, q, case)?;
    let count = integral_count(rs, &lq)?;
    Ok(rs.dim_nilpotent_cone() - count)
}

#[cfg(test)]
mod tests {
    use crate::orbits::case_for;
    use super::*;
    use crate::rootsys::{CartanType, Family};

    fn rs(f: Family, r: usize) -> RootSystem {
        RootSystem::build(CartanType::new(f, r).unwrap())
    }

    #[test]
    fn lambda_1_is_zero() {
        for sys in [rs(Family::A, 3), rs(Family::G, 2), rs(Family::B, 2)] {
            let lq = lambda_q(&sys, 1, CaseTag::Principal).unwrap();
            assert!(lq.weight().coords().iter().all(|c| c.is_zero()));
            let count = integral_count(&sys, &lq).unwrap();
            assert_eq!(count, sys.num_roots() as i64);
            assert_eq!(var_dim_joseph(&sys, 1, CaseTag::Principal).unwrap(), 0);
        }
    }

    #[test]
    fn a1_pairing_third() {
        let sys = rs(Family::A, 1);
        let lq = lambda_q(&sys, 3, CaseTag::Principal).unwrap();
        let shifted = lq.shifted(&sys);
        let alpha = sys.positive_roots()[0].clone();
        assert_eq!(sys.pairing(&shifted, &alpha), Ratio::new(1, 3));
    }

    #[test]
    fn counts_match_tables() {
        assert_eq!(
            integral_count(&rs(Family::G, 2), &lambda_q(&rs(Family::G, 2), 4, CaseTag::Principal).unwrap())
                .unwrap(),
            2
        );
        let e7 = rs(Family::E, 7);
        let lq = lambda_q(&e7, 9, CaseTag::Principal).unwrap();
        assert_eq!(integral_count(&e7, &lq).unwrap(), 8);
    }

    #[test]
    fn var_dim_examples() {
        assert_eq!(var_dim_joseph(&rs(Family::F, 4), 3, CaseTag::Principal).unwrap(), 36);
        assert_eq!(var_dim_joseph(&rs(Family::E, 8), 5, CaseTag::Principal).unwrap(), 200);
    }

    #[test]
    fn coprincipal_b2() {
        let b2 = rs(Family::B, 2);
        let lq = lambda_q(&b2, 2, CaseTag::Coprincipal).unwrap();
        // lambda_q + rho = rho^v / 2
        let shifted = lq.shifted(&b2);
        assert_eq!(shifted, b2.rho_check().scale(Ratio::new(1, 2)));
        assert_eq!(integral_count(&b2, &lq).unwrap(), 4);
        assert_eq!(var_dim_joseph(&b2, 2, CaseTag::Coprincipal).unwrap(), 4);
    }

    #[test]
    fn path_agreement_across_types() {
        for sys in [
            rs(Family::A, 4),
            rs(Family::B, 3),
            rs(Family::C, 3),
            rs(Family::D, 4),
            rs(Family::G, 2),
            rs(Family::F, 4),
        ] {
            let lacing = sys.lacing();
            for q in 1..=2 * sys.coxeter_number() {
                let case = case_for(lacing, q);
                let lq = lambda_q(&sys, q, case).unwrap();
                assert!(integral_count(&sys, &lq).is_ok(), "{} q={}", sys.cartan_type(), q);
            }
        }
    }

    #[test]
    fn case_mismatch_rejected() {
        let b2 = rs(Family::B, 2);
        assert!(lambda_q(&b2, 2, CaseTag::Principal).is_err());
        assert!(lambda_q(&b2, 3, CaseTag::Coprincipal).is_err());
        assert!(lambda_q(&b2, 3, CaseTag::Extended).is_err());
        // extended is fine at non-coprime q
        assert!(lambda_q(&b2, 2, CaseTag::Extended).is_ok());
    }
}
