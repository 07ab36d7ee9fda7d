//! Batch verification: one record per (type, q) comparing the two sides of
//! the orbit-dimension identity, with the selected cross-checks attached.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::affine::verify_prop_2_4;
use crate::ekv::{d_classical, d_via_heights, predicted_centralizer_coprincipal};
use crate::integral_roots::{integral_count_direct, integral_count_heights_with, lambda_q};
use crate::oracle::{Oracle, SearchCase};
use crate::orbits::{
    case_for, exceptional_table, orbit_q_classical, orbit_q_exceptional, CaseTag, OrbitLabel,
};
use crate::partitions::ClassicalFamily;
use crate::rootsys::{CartanType, Family, RootSystem};
use crate::{Error, Result};

/// One verified (type, q) pair. `checks` maps check names to outcomes;
/// the record passes iff the orbit-dimension identity and every enabled
/// cross-check hold.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub cartan_type: String,
    pub q: u64,
    pub case: String,
    pub orbit: String,
    pub dim_orbit: i64,
    pub n_integral: i64,
    pub var_dim: i64,
    pub checks: BTreeMap<String, bool>,
}

impl Record {
    pub fn passed(&self) -> bool {
        self.var_dim == self.dim_orbit && self.checks.values().all(|&b| b)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub records: Vec<Record>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn from_records(records: Vec<Record>) -> Self {
        let total = records.len();
        let passed = records.iter().filter(|r| r.passed()).count();
        VerificationReport {
            records,
            summary: Summary {
                total,
                passed,
                failed: total - passed,
            },
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Io(format!("bad report JSON: {}", e)))
    }
}

/// Cross-check selection for `verify`.
#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub with_oracle: bool,
    /// Largest matrix size n the oracle search runs at.
    pub oracle_n_bound: u64,
    pub with_prop24: bool,
    /// Window for the affine check; `None` means 3q.
    pub window: Option<i64>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            with_oracle: false,
            oracle_n_bound: 10,
            with_prop24: false,
            window: None,
        }
    }
}

/// Default q-range for a type: 1 up to two past every stabilization bound.
pub fn default_q_range(rs: &RootSystem) -> (u64, u64) {
    let h = rs.coxeter_number();
    let lacing = rs.lacing();
    let co = lacing * rs.dual_coxeter_number();
    let dual = RootSystem::build(rs.cartan_type().langlands_dual());
    let co_dual = lacing * dual.dual_coxeter_number();
    (1, h.max(co).max(co_dual) + 2)
}

/// Verify a single (type, q) and return the record.
pub fn verify_one(
    rs: &RootSystem,
    dual_rs: &RootSystem,
    oracle: Option<&Oracle>,
    q: u64,
    opts: &VerifyOptions,
) -> Result<Record> {
    let ct = rs.cartan_type();
    let case = case_for(rs.lacing(), q);
    let mut checks: BTreeMap<String, bool> = BTreeMap::new();

    // both integral-root paths, recorded as an explicit check
    let lq = lambda_q(rs, q, case)?;
    let direct = integral_count_direct(rs, &lq);
    let heights = integral_count_heights_with(rs, dual_rs, q, case);
    checks.insert("path_agreement".into(), direct == heights);
    let n_integral = direct;
    let var_dim = rs.dim_nilpotent_cone() - n_integral;

    // the orbit side
    let family = ClassicalFamily::from_cartan_type(ct);
    let orbit = if ct.is_exceptional() {
        orbit_q_exceptional(ct, q, case)?
    } else {
        orbit_q_classical(family.unwrap(), q, case)?
    };

    checks.insert("theorem".into(), var_dim == orbit.dim);

    // duality of the height count
    checks.insert(
        "duality".into(),
        d_via_heights(rs, q) == d_via_heights(dual_rs, q),
    );

    if let Some(fam) = family {
        // EKV relation at this q
        checks.insert("ekv".into(), d_via_heights(rs, q) == d_classical(fam, q));
        // centralizer against the closed forms
        if let OrbitLabel::Classical(o) = &orbit.label {
            let predicted = match case {
                CaseTag::Principal => d_classical(fam, q),
                CaseTag::Coprincipal => predicted_centralizer_coprincipal(fam, q)?,
                CaseTag::Extended => unreachable!(),
            };
            checks.insert("centralizer".into(), o.centralizer_dim() == predicted);
        }
        if opts.with_oracle && fam.n() <= opts.oracle_n_bound {
            if let Some(oracle) = oracle {
                let sc = match case {
                    CaseTag::Principal => SearchCase::Principal,
                    CaseTag::Coprincipal => SearchCase::Coprincipal,
                    CaseTag::Extended => unreachable!(),
                };
                let found = oracle.max_orbit(q, sc)?;
                let matches = matches!(
                    &orbit.label,
                    OrbitLabel::Classical(o) if o == &found
                );
                checks.insert("oracle".into(), matches);
            }
        }
    } else if q > 1 {
        // table consistency: the listed integral-root count must equal ours
        let rows = exceptional_table(ct, case)?;
        let row = rows
            .iter()
            .find(|r| r.label == orbit.label.to_string() && r.dim == orbit.dim);
        checks.insert(
            "table_delta".into(),
            row.map_or(false, |r| r.n_integral == n_integral),
        );
    }

    if opts.with_prop24 {
        let bound = if case == CaseTag::Principal {
            rs.dual_coxeter_number()
        } else {
            rs.coxeter_number()
        };
        let p = (bound..)
            .find(|p| num_integer::gcd(*p, q) == 1)
            .expect("coprime p exists");
        let window = opts.window.unwrap_or(3 * q as i64);
        let report = verify_prop_2_4(rs, p, q, window)?;
        checks.insert("prop24".into(), report.pass());
    }

    Ok(Record {
        cartan_type: ct.to_string(),
        q,
        case: case.name().into(),
        orbit: orbit.label.to_string(),
        dim_orbit: orbit.dim,
        n_integral,
        var_dim,
        checks,
    })
}

/// Verify a q-range for one type.
pub fn verify_type(
    ct: CartanType,
    q_range: Option<(u64, u64)>,
    opts: &VerifyOptions,
) -> Result<VerificationReport> {
    let rs = RootSystem::build(ct);
    let dual_rs = RootSystem::build(ct.langlands_dual());
    let (lo, hi) = q_range.unwrap_or_else(|| default_q_range(&rs));
    let family = ClassicalFamily::from_cartan_type(ct);
    let oracle = match family {
        Some(fam) if opts.with_oracle && fam.n() <= opts.oracle_n_bound => {
            Some(Oracle::new(fam)?)
        }
        _ => None,
    };
    let mut records = Vec::new();
    for q in lo.max(1)..=hi {
        records.push(verify_one(&rs, &dual_rs, oracle.as_ref(), q, opts)?);
    }
    Ok(VerificationReport::from_records(records))
}

/// Matrix sizes of a classical family letter within a range, skipping sizes
/// with no root system in bounds (so_6, sp_2, and parity mismatches).
pub fn family_sizes(letter: Family, n_lo: u64, n_hi: u64) -> Vec<ClassicalFamily> {
    let mut out = Vec::new();
    for n in n_lo..=n_hi {
        let fam = match letter {
            Family::A => ClassicalFamily::new_sl(n).ok(),
            Family::B => {
                if n % 2 == 1 {
                    ClassicalFamily::new_so(n).ok()
                } else {
                    None
                }
            }
            Family::C => ClassicalFamily::new_sp(n).ok(),
            Family::D => {
                if n % 2 == 0 {
                    ClassicalFamily::new_so(n).ok()
                } else {
                    None
                }
            }
            _ => None,
        };
        if let Some(fam) = fam {
            if fam.cartan_type().is_some() {
                out.push(fam);
            }
        }
    }
    out
}

/// Verify a family letter over matrix-size and q ranges.
pub fn verify_family(
    letter: Family,
    n_range: (u64, u64),
    q_range: Option<(u64, u64)>,
    opts: &VerifyOptions,
) -> Result<VerificationReport> {
    let mut records = Vec::new();
    for fam in family_sizes(letter, n_range.0, n_range.1) {
        let ct = fam.cartan_type().expect("filtered");
        let rs = RootSystem::build(ct);
        let dual_rs = RootSystem::build(ct.langlands_dual());
        let (lo, hi) = q_range.unwrap_or_else(|| default_q_range(&rs));
        let oracle = if opts.with_oracle && fam.n() <= opts.oracle_n_bound {
            Some(Oracle::new(fam)?)
        } else {
            None
        };
        for q in lo.max(1)..=hi {
            records.push(verify_one(&rs, &dual_rs, oracle.as_ref(), q, opts)?);
        }
    }
    Ok(VerificationReport::from_records(records))
}

/// A conjectural record: both sides of the identity at `q` not coprime to
/// the lacing number, evaluated with the principal-case weight. Reported,
/// never asserted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExploreRecord {
    pub cartan_type: String,
    pub q: u64,
    pub orbit: String,
    pub dim_nq: i64,
    pub var_dim: i64,
    pub equal: bool,
}

pub fn explore_noncoprime(ct: CartanType, q: u64) -> Result<ExploreRecord> {
    if num_integer::gcd(q, ct.lacing()) == 1 {
        return Err(Error::Unsupported(format!(
            "q = {} is coprime to the lacing number of {}; nothing to explore",
            q, ct
        )));
    }
    let rs = RootSystem::build(ct);
    let lq = lambda_q(&rs, q, CaseTag::Extended)?;
    let direct = integral_count_direct(&rs, &lq);
    let heights = crate::integral_roots::integral_count_heights(&rs, q, CaseTag::Extended);
    if direct != heights {
        return Err(Error::Internal(format!(
            "integral-root paths disagree for extended {} q={}",
            ct, q
        )));
    }
    let var_dim = rs.dim_nilpotent_cone() - direct;
    let orbit = orbit_q_exceptional(ct, q, CaseTag::Extended)?;
    Ok(ExploreRecord {
        cartan_type: ct.to_string(),
        q,
        orbit: orbit.label.to_string(),
        dim_nq: orbit.dim,
        var_dim,
        equal: orbit.dim == var_dim,
    })
}
