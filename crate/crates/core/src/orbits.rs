//! The orbit database for `O_q`: closed-form partitions for the classical
//! families and lookup tables for the exceptional types.
//!
//! The classical sub-cases are encoded verbatim from the case lists (shape,
//! parities, remainder range). For a given `(family, q)` each candidate shape
//! is solved for `(m, s)`; boundary values are normalized to a canonical
//! partition and all matching shapes must agree on a single partition, so a
//! transcription error fails loudly instead of picking an arbitrary branch.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;

use crate::partitions::{ClassicalFamily, ClassicalOrbit, Partition};
use crate::rootsys::CartanType;
use crate::{Error, Result};

/// Which of the two coprimality regimes a value of `q` falls in, plus the
/// extended tag for principal-table values at `q` not coprime to the lacing
/// number (the parenthesized table entries).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseTag {
    Principal,
    Coprincipal,
    Extended,
}

impl CaseTag {
    pub fn name(self) -> &'static str {
        match self {
            CaseTag::Principal => "principal",
            CaseTag::Coprincipal => "coprincipal",
            CaseTag::Extended => "extended",
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The case determined by divisibility: principal iff `gcd(q, lacing) = 1`.
pub fn case_for(lacing: u64, q: u64) -> CaseTag {
    if num_integer::gcd(q, lacing) == 1 {
        CaseTag::Principal
    } else {
        CaseTag::Coprincipal
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrbitLabel {
    Classical(ClassicalOrbit),
    Exceptional(String),
}

impl fmt::Display for OrbitLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrbitLabel::Classical(o) => write!(f, "{}", o),
            OrbitLabel::Exceptional(s) => f.write_str(s),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitQResult {
    pub label: OrbitLabel,
    pub dim: i64,
    pub case: CaseTag,
}

// ---------------------------------------------------------------------------
// Classical sub-case engine
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Parity {
    Even,
    Odd,
}

impl Parity {
    fn matches(self, v: u64) -> bool {
        match self {
            Parity::Even => v % 2 == 0,
            Parity::Odd => v % 2 == 1,
        }
    }
}

/// One shape from the case lists: fixed parts, then a run of `run_part`
/// repeated `m` times, then the remainder `s`, then fixed trailing parts.
struct SubCase {
    name: &'static str,
    prefix: Vec<u64>,
    run_part: u64,
    m_parity: Option<Parity>,
    mid: Vec<u64>,
    s_lo: u64,
    s_hi: u64,
    s_parity: Option<Parity>,
    suffix: Vec<u64>,
}

impl SubCase {
    /// Solve `n = fixed + m * run_part + s` within the stated bounds.
    fn solve(&self, n: u64) -> Vec<(u64, u64, Partition)> {
        let fixed: u64 = self.prefix.iter().sum::<u64>()
            + self.mid.iter().sum::<u64>()
            + self.suffix.iter().sum::<u64>();
        let mut found = Vec::new();
        let mut s = self.s_lo;
        while s <= self.s_hi {
            if self.s_parity.map_or(true, |p| p.matches(s)) {
                if let Some(rest) = n.checked_sub(fixed + s) {
                    if rest % self.run_part == 0 {
                        let m = rest / self.run_part;
                        if self.m_parity.map_or(true, |p| p.matches(m)) {
                            let mut parts = self.prefix.clone();
                            parts.extend(std::iter::repeat(self.run_part).take(m as usize));
                            parts.extend_from_slice(&self.mid);
                            parts.push(s);
                            parts.extend_from_slice(&self.suffix);
                            if let Ok(p) = Partition::normalized(parts) {
                                found.push((m, s, p));
                            }
                        }
                    }
                }
            }
            s += 1;
        }
        found
    }
}

fn subcases(family: ClassicalFamily, q: u64, case: CaseTag) -> Vec<SubCase> {
    let so_even = matches!(family, ClassicalFamily::So(n) if n % 2 == 0);
    let so_odd = matches!(family, ClassicalFamily::So(n) if n % 2 == 1);
    match (family, case) {
        (ClassicalFamily::Sl(_), CaseTag::Principal) => vec![SubCase {
            name: "(q^m, s)",
            prefix: vec![],
            run_part: q,
            m_parity: None,
            mid: vec![],
            s_lo: 0,
            s_hi: q - 1,
            s_parity: None,
            suffix: vec![],
        }],

        (ClassicalFamily::So(_), CaseTag::Principal) if so_even => {
            if q % 2 == 1 {
                vec![
                    SubCase {
                        name: "(q^m, s), q, m odd, 0 <= s <= q odd",
                        prefix: vec![],
                        run_part: q,
                        m_parity: Some(Parity::Odd),
                        mid: vec![],
                        s_lo: 0,
                        s_hi: q,
                        s_parity: Some(Parity::Odd),
                        suffix: vec![],
                    },
                    SubCase {
                        name: "(q^m, s, 1), q odd, m even, 0 <= s <= q-1 odd",
                        prefix: vec![],
                        run_part: q,
                        m_parity: Some(Parity::Even),
                        mid: vec![],
                        s_lo: 0,
                        s_hi: q - 1,
                        s_parity: Some(Parity::Odd),
                        suffix: vec![1],
                    },
                ]
            } else {
                vec![
                    SubCase {
                        name: "(q+1, q^m, s), q, m even, 0 <= s <= q-1 odd",
                        prefix: vec![q + 1],
                        run_part: q,
                        m_parity: Some(Parity::Even),
                        mid: vec![],
                        s_lo: 0,
                        s_hi: q - 1,
                        s_parity: Some(Parity::Odd),
                        suffix: vec![],
                    },
                    SubCase {
                        name: "(q+1, q^m, q-1, s, 1), q, m even, 0 <= s <= q-1 odd",
                        prefix: vec![q + 1],
                        run_part: q,
                        m_parity: Some(Parity::Even),
                        mid: vec![q - 1],
                        s_lo: 0,
                        s_hi: q - 1,
                        s_parity: Some(Parity::Odd),
                        suffix: vec![1],
                    },
                ]
            }
        }

        (ClassicalFamily::So(_), CaseTag::Principal) if so_odd => vec![
            SubCase {
                name: "(q^m, s), q odd, m even, 0 <= s <= q odd",
                prefix: vec![],
                run_part: q,
                m_parity: Some(Parity::Even),
                mid: vec![],
                s_lo: 0,
                s_hi: q,
                s_parity: Some(Parity::Odd),
                suffix: vec![],
            },
            SubCase {
                name: "(q^m, s, 1), q, m odd, 0 <= s <= q-1 odd",
                prefix: vec![],
                run_part: q,
                m_parity: Some(Parity::Odd),
                mid: vec![],
                s_lo: 0,
                s_hi: q - 1,
                s_parity: Some(Parity::Odd),
                suffix: vec![1],
            },
        ],

        (ClassicalFamily::Sp(_), CaseTag::Principal) => vec![
            SubCase {
                name: "(q^m, s), q odd, m even, 0 <= s <= q-1 even",
                prefix: vec![],
                run_part: q,
                m_parity: Some(Parity::Even),
                mid: vec![],
                s_lo: 0,
                s_hi: q - 1,
                s_parity: Some(Parity::Even),
                suffix: vec![],
            },
            SubCase {
                name: "(q^m, q-1, s), q odd, m even, 0 <= s <= q-1 even",
                prefix: vec![],
                run_part: q,
                m_parity: Some(Parity::Even),
                mid: vec![q - 1],
                s_lo: 0,
                s_hi: q - 1,
                s_parity: Some(Parity::Even),
                suffix: vec![],
            },
        ],

        (ClassicalFamily::So(_), CaseTag::Coprincipal) if so_odd => vec![
            SubCase {
                name: "(q^m, s), q, m even, 0 <= s <= q-1 odd",
                prefix: vec![],
                run_part: q,
                m_parity: Some(Parity::Even),
                mid: vec![],
                s_lo: 0,
                s_hi: q - 1,
                s_parity: Some(Parity::Odd),
                suffix: vec![],
            },
            SubCase {
                name: "(q^m, q-1, s, 1), q, m even, 0 <= s <= q-1 odd",
                prefix: vec![],
                run_part: q,
                m_parity: Some(Parity::Even),
                mid: vec![q - 1],
                s_lo: 0,
                s_hi: q - 1,
                s_parity: Some(Parity::Odd),
                suffix: vec![1],
            },
        ],

        (ClassicalFamily::Sp(_), CaseTag::Coprincipal) => {
            let half = q / 2;
            if half % 2 == 0 {
                // The m-parity constraint is dropped here: for even q/2 the
                // partition ((q/2)^m, s) is valid for either parity of m and
                // is the unique maximal one; demanding m even leaves some n
                // with no matching sub-case at all (e.g. sp_6, q = 8).
                vec![SubCase {
                    name: "((q/2)^m, s), q/2 even, 0 <= s <= q/2-1 even",
                    prefix: vec![],
                    run_part: half,
                    m_parity: None,
                    mid: vec![],
                    s_lo: 0,
                    s_hi: half - 1,
                    s_parity: Some(Parity::Even),
                    suffix: vec![],
                }]
            } else {
                vec![
                    SubCase {
                        name: "(q/2+1, (q/2)^m, s), q/2 odd, m even, 0 <= s <= q/2-1 even",
                        prefix: vec![half + 1],
                        run_part: half,
                        m_parity: Some(Parity::Even),
                        mid: vec![],
                        s_lo: 0,
                        s_hi: half - 1,
                        s_parity: Some(Parity::Even),
                        suffix: vec![],
                    },
                    SubCase {
                        name: "(q/2+1, (q/2)^m, q/2-1, s), q/2 odd, m even, 0 <= s <= q/2-1 even",
                        prefix: vec![half + 1],
                        run_part: half,
                        m_parity: Some(Parity::Even),
                        mid: vec![half - 1],
                        s_lo: 0,
                        s_hi: half - 1,
                        s_parity: Some(Parity::Even),
                        suffix: vec![],
                    },
                ]
            }
        }

        _ => vec![],
    }
}

/// Smallest `q` from which the orbit is the regular one and the case lists
/// no longer apply: the Coxeter number in the principal case, twice the dual
/// Coxeter number of the Langlands dual in the coprincipal case.
fn stable_threshold(family: ClassicalFamily, case: CaseTag) -> u64 {
    match case {
        CaseTag::Principal | CaseTag::Extended => family.coxeter_number(),
        CaseTag::Coprincipal => 2 * family.langlands_dual().dual_coxeter_number(),
    }
}

fn validate_case(family: ClassicalFamily, q: u64, case: CaseTag) -> Result<()> {
    if q == 0 {
        return Err(Error::Unsupported("q must be positive".into()));
    }
    let lacing = family.lacing();
    match case {
        CaseTag::Principal => {
            if num_integer::gcd(q, lacing) != 1 {
                return Err(Error::Unsupported(format!(
                    "q = {} is not coprime to the lacing number of {}",
                    q, family
                )));
            }
        }
        CaseTag::Coprincipal => {
            if lacing == 1 || q % lacing != 0 {
                return Err(Error::Unsupported(format!(
                    "coprincipal case needs lacing | q; {} has lacing {}, q = {}",
                    family, lacing, q
                )));
            }
        }
        CaseTag::Extended => {
            return Err(Error::Unsupported(
                "extended lookups only apply to the exceptional tables".into(),
            ));
        }
    }
    Ok(())
}

/// The orbit `O_q` for a classical family, from the sub-case lists.
pub fn orbit_q_classical(
    family: ClassicalFamily,
    q: u64,
    case: CaseTag,
) -> Result<OrbitQResult> {
    validate_case(family, q, case)?;
    let n = family.n();

    let mut matches: BTreeSet<Partition> = BTreeSet::new();
    let mut names: Vec<String> = Vec::new();
    for sc in subcases(family, q, case) {
        for (_m, _s, p) in sc.solve(n) {
            if family.admits(&p) {
                names.push(format!("{} -> {}", sc.name, p));
                matches.insert(p);
            }
        }
    }

    let partition = match matches.len() {
        1 => matches.into_iter().next().unwrap(),
        0 => {
            // Stable regime: every shape in the lists has run out; the orbit
            // is regular from the stated threshold on.
            if q >= stable_threshold(family, case) {
                family.regular_partition()
            } else {
                return Err(Error::NoSubcase {
                    family: family.to_string(),
                    q,
                    case: case.name().into(),
                });
            }
        }
        _ => {
            return Err(Error::AmbiguousSubcase {
                family: family.to_string(),
                q,
                candidates: names.join("; "),
            })
        }
    };

    if q >= stable_threshold(family, case) {
        // A shape that still matches in the stable regime must produce the
        // regular partition.
        if partition != family.regular_partition() {
            return Err(Error::Internal(format!(
                "stable regime for {} q={} produced {}",
                family, q, partition
            )));
        }
    }

    let orbit = ClassicalOrbit::new(family, partition)?;
    let dim = orbit.orbit_dim();
    Ok(OrbitQResult {
        label: OrbitLabel::Classical(orbit),
        dim,
        case,
    })
}

// ---------------------------------------------------------------------------
// Exceptional tables
// ---------------------------------------------------------------------------

/// One row of an exceptional orbit table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    /// Display form of the q column, e.g. `"(3), 4, 5"` or `">= 12"`.
    pub q_label: String,
    /// Explicit q values covered (unparenthesized).
    pub q_plain: Vec<u64>,
    /// Parenthesized q values: not coprime to the lacing number.
    pub q_paren: Vec<u64>,
    /// Lower end of a closing `>= q` range, if any.
    pub q_from: Option<u64>,
    pub label: String,
    pub dim: i64,
    pub n_integral: i64,
}

impl TableRow {
    fn covers_plain(&self, q: u64) -> bool {
        self.q_plain.contains(&q) || self.q_from.map_or(false, |f| q >= f)
    }

    fn covers_paren(&self, q: u64) -> bool {
        self.q_paren.contains(&q) || self.q_from.map_or(false, |f| q >= f)
    }
}

#[derive(Debug)]
struct ExceptionalTables {
    sections: Vec<(String, CaseTag, Vec<TableRow>)>,
}

static TABLES: OnceLock<ExceptionalTables> = OnceLock::new();

const TABLE_DATA: &str = include_str!("../data/exceptional_tables.txt");

fn tables() -> &'static ExceptionalTables {
    TABLES.get_or_init(|| parse_tables(TABLE_DATA).expect("bundled orbit tables must parse"))
}

fn parse_tables(text: &str) -> Result<ExceptionalTables> {
    let bad = |msg: String| Error::Internal(format!("orbit table data: {}", msg));
    let mut sections: Vec<(String, CaseTag, Vec<TableRow>)> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(head) = line.strip_prefix('[') {
            let head = head
                .strip_suffix(']')
                .ok_or_else(|| bad(format!("line {}: unterminated header", lineno + 1)))?;
            let mut it = head.split_whitespace();
            let ty = it
                .next()
                .ok_or_else(|| bad(format!("line {}: missing type", lineno + 1)))?;
            let case = match it.next() {
                Some("principal") => CaseTag::Principal,
                Some("coprincipal") => CaseTag::Coprincipal,
                other => {
                    return Err(bad(format!("line {}: bad case {:?}", lineno + 1, other)))
                }
            };
            CartanType::parse(ty)?;
            sections.push((ty.to_string(), case, Vec::new()));
            continue;
        }
        let section = sections
            .last_mut()
            .ok_or_else(|| bad(format!("line {}: row before any header", lineno + 1)))?;
        let cols: Vec<&str> = line.split('|').map(str::trim).collect();
        if cols.len() != 4 {
            return Err(bad(format!("line {}: expected 4 columns", lineno + 1)));
        }
        let q_label = cols[0].to_string();
        let mut q_plain = Vec::new();
        let mut q_paren = Vec::new();
        let mut q_from = None;
        let tokens: Vec<&str> = cols[0].split(',').map(str::trim).collect();
        for (i, tok) in tokens.iter().enumerate() {
            if let Some(num) = tok.strip_prefix("(").and_then(|t| t.strip_suffix(")")) {
                q_paren.push(
                    num.parse::<u64>()
                        .map_err(|_| bad(format!("line {}: bad token {}", lineno + 1, tok)))?,
                );
            } else if let Some(num) = tok.strip_prefix(">=") {
                q_from = Some(
                    num.trim()
                        .parse::<u64>()
                        .map_err(|_| bad(format!("line {}: bad token {}", lineno + 1, tok)))?,
                );
            } else if *tok == "..." {
                // fill the open interval between the neighbouring plain values
                let prev = q_plain
                    .last()
                    .copied()
                    .ok_or_else(|| bad(format!("line {}: ... without left end", lineno + 1)))?;
                let next: u64 = tokens
                    .get(i + 1)
                    .ok_or_else(|| bad(format!("line {}: ... without right end", lineno + 1)))?
                    .parse()
                    .map_err(|_| bad(format!("line {}: ... needs plain right end", lineno + 1)))?;
                for v in prev + 1..next {
                    q_plain.push(v);
                }
            } else {
                q_plain.push(
                    tok.parse::<u64>()
                        .map_err(|_| bad(format!("line {}: bad token {}", lineno + 1, tok)))?,
                );
            }
        }
        let dim: i64 = cols[2]
            .parse()
            .map_err(|_| bad(format!("line {}: bad dim", lineno + 1)))?;
        let n_integral: i64 = cols[3]
            .parse()
            .map_err(|_| bad(format!("line {}: bad integral count", lineno + 1)))?;
        section.2.push(TableRow {
            q_label,
            q_plain,
            q_paren,
            q_from,
            label: cols[1].to_string(),
            dim,
            n_integral,
        });
    }

    // Coverage validation: every q in the section's regime is covered exactly
    // once up to a bound beyond all explicit entries.
    for (ty, case, rows) in &sections {
        let ct = CartanType::parse(ty)?;
        let lacing = ct.lacing();
        for q in 2..=100 {
            let (relevant, expect_paren) = match case {
                CaseTag::Principal => {
                    let coprime = num_integer::gcd(q, lacing) == 1;
                    (true, !coprime)
                }
                CaseTag::Coprincipal => (q % lacing == 0 && lacing > 1, false),
                CaseTag::Extended => unreachable!(),
            };
            if !relevant {
                continue;
            }
            let hits = rows
                .iter()
                .filter(|r| {
                    if expect_paren {
                        r.covers_paren(q)
                    } else {
                        r.covers_plain(q)
                    }
                })
                .count();
            if expect_paren && hits > 1 {
                return Err(bad(format!("{} {}: q={} covered {} times", ty, case, q, hits)));
            }
            if !expect_paren && hits != 1 {
                return Err(bad(format!("{} {}: q={} covered {} times", ty, case, q, hits)));
            }
        }
    }
    Ok(ExceptionalTables { sections })
}

/// The rows of an exceptional table, for rendering and golden tests.
pub fn exceptional_table(ct: CartanType, case: CaseTag) -> Result<&'static [TableRow]> {
    if !ct.is_exceptional() {
        return Err(Error::Unsupported(format!("{} is not exceptional", ct)));
    }
    let want_case = match case {
        CaseTag::Extended => CaseTag::Principal,
        c => c,
    };
    if want_case == CaseTag::Coprincipal && ct.lacing() == 1 {
        return Err(Error::Unsupported(format!(
            "{} is simply laced; there is no coprincipal table",
            ct
        )));
    }
    let name = ct.to_string();
    tables()
        .sections
        .iter()
        .find(|(ty, c, _)| *ty == name && *c == want_case)
        .map(|(_, _, rows)| rows.as_slice())
        .ok_or_else(|| Error::Internal(format!("missing table {} {}", name, case)))
}

/// Table lookup for an exceptional type. `Extended` reads the parenthesized
/// principal entries at `q` not coprime to the lacing number.
pub fn orbit_q_exceptional(ct: CartanType, q: u64, case: CaseTag) -> Result<OrbitQResult> {
    if q == 0 {
        return Err(Error::Unsupported("q must be positive".into()));
    }
    if !ct.is_exceptional() {
        return Err(Error::Unsupported(format!("{} is not exceptional", ct)));
    }
    let lacing = ct.lacing();
    let coprime = num_integer::gcd(q, lacing) == 1;
    match case {
        CaseTag::Principal if !coprime => {
            return Err(Error::Unsupported(format!(
                "q = {} is not coprime to the lacing number of {}; use the coprincipal or extended lookup",
                q, ct
            )))
        }
        CaseTag::Coprincipal if coprime || lacing == 1 => {
            return Err(Error::Unsupported(format!(
                "q = {} is not a coprincipal denominator for {}",
                q, ct
            )))
        }
        CaseTag::Extended if coprime => {
            return Err(Error::Unsupported(format!(
                "q = {} is coprime to the lacing number of {}; extended does not apply",
                q, ct
            )))
        }
        _ => {}
    }

    if q == 1 {
        return Ok(OrbitQResult {
            label: OrbitLabel::Exceptional("0".into()),
            dim: 0,
            case: CaseTag::Principal,
        });
    }

    let rows = exceptional_table(ct, case)?;
    let row = rows
        .iter()
        .find(|r| match case {
            CaseTag::Principal => r.covers_plain(q),
            CaseTag::Coprincipal => r.covers_plain(q),
            CaseTag::Extended => r.covers_paren(q),
        })
        .ok_or_else(|| Error::Unsupported(format!("{} has no {} entry at q = {}", ct, case, q)))?;
    Ok(OrbitQResult {
        label: OrbitLabel::Exceptional(row.label.clone()),
        dim: row.dim,
        case,
    })
}

/// Dispatch on the type: classical families go through the sub-case engine,
/// exceptional types through the tables. The case is determined by
/// divisibility unless `extended` asks for the conjectural principal value.
pub fn orbit_q(ct: CartanType, q: u64, extended: bool) -> Result<OrbitQResult> {
    let lacing = ct.lacing();
    let case = if extended {
        if num_integer::gcd(q, lacing) == 1 {
            return Err(Error::Unsupported(format!(
                "q = {} is coprime to the lacing number of {}; extended does not apply",
                q, ct
            )));
        }
        CaseTag::Extended
    } else {
        case_for(lacing, q)
    };
    if ct.is_exceptional() {
        orbit_q_exceptional(ct, q, case)
    } else {
        let family = ClassicalFamily::from_cartan_type(ct).ok_or_else(|| {
            Error::Unsupported(format!("{} has no classical matrix realization", ct))
        })?;
        if case == CaseTag::Extended {
            return Err(Error::Unsupported(
                "extended lookups only apply to the exceptional tables".into(),
            ));
        }
        orbit_q_classical(family, q, case)
    }
}

/// `dim N_q` (principal) or `dim {}^L N_{q / lacing}` (coprincipal).
pub fn dim_nq(ct: CartanType, q: u64, extended: bool) -> Result<i64> {
    orbit_q(ct, q, extended).map(|r| r.dim)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::Family;

    fn sl(n: u64) -> ClassicalFamily {
        ClassicalFamily::new_sl(n).unwrap()
    }
    fn so(n: u64) -> ClassicalFamily {
        ClassicalFamily::new_so(n).unwrap()
    }
    fn sp(n: u64) -> ClassicalFamily {
        ClassicalFamily::new_sp(n).unwrap()
    }
    fn parts(r: &OrbitQResult) -> Vec<u64> {
        match &r.label {
            OrbitLabel::Classical(o) => o.partition().parts().to_vec(),
            _ => panic!("expected classical orbit"),
        }
    }
    fn ct(f: Family, r: usize) -> CartanType {
        CartanType::new(f, r).unwrap()
    }

    #[test]
    fn sl7_q3() {
        let r = orbit_q_classical(sl(7), 3, CaseTag::Principal).unwrap();
        assert_eq!(parts(&r), vec![3, 3, 1]);
        assert_eq!(r.dim, 32);
    }

    #[test]
    fn sl_regular_for_large_q() {
        for n in 2..=9u64 {
            for q in n..=n + 4 {
                let r = orbit_q_classical(sl(n), q, CaseTag::Principal).unwrap();
                assert_eq!(parts(&r), vec![n]);
                assert_eq!(r.dim, (n * n - n) as i64);
            }
        }
    }

    #[test]
    fn sl_q1_zero_orbit() {
        let r = orbit_q_classical(sl(5), 1, CaseTag::Principal).unwrap();
        assert_eq!(parts(&r), vec![1, 1, 1, 1, 1]);
        assert_eq!(r.dim, 0);
    }

    #[test]
    fn sp4_q2_coprincipal() {
        let r = orbit_q_classical(sp(4), 2, CaseTag::Coprincipal).unwrap();
        assert_eq!(parts(&r), vec![2, 1, 1]);
        assert_eq!(r.dim, 4);
    }

    #[test]
    fn so7_q2_coprincipal() {
        let r = orbit_q_classical(so(7), 2, CaseTag::Coprincipal).unwrap();
        assert_eq!(parts(&r), vec![2, 2, 1, 1, 1]);
        assert_eq!(r.dim, 8);
    }

    #[test]
    fn sp6_q8_coprincipal_needs_relaxed_parity() {
        // q/2 = 4 even, m = 1 odd: the relaxed sub-case must fire.
        let r = orbit_q_classical(sp(6), 8, CaseTag::Coprincipal).unwrap();
        assert_eq!(parts(&r), vec![4, 2]);
        assert_eq!(r.dim, 16);
    }

    #[test]
    fn so_even_stable_regime() {
        // even q >= h for so(2l) falls outside the sub-case lists
        for q in [8u64, 10, 12] {
            let r = orbit_q_classical(so(8), q, CaseTag::Principal).unwrap();
            assert_eq!(parts(&r), vec![7, 1]);
            assert_eq!(r.dim, 24);
        }
        // odd q >= h matches a sub-case and must agree with the fallback
        for q in [7u64, 9, 11] {
            let r = orbit_q_classical(so(8), q, CaseTag::Principal).unwrap();
            assert_eq!(parts(&r), vec![7, 1]);
        }
    }

    #[test]
    fn case_validation() {
        assert!(orbit_q_classical(so(7), 2, CaseTag::Principal).is_err());
        assert!(orbit_q_classical(so(7), 3, CaseTag::Coprincipal).is_err());
        assert!(orbit_q_classical(sl(5), 3, CaseTag::Coprincipal).is_err());
        assert!(orbit_q_classical(so(8), 2, CaseTag::Coprincipal).is_err());
    }

    #[test]
    fn subcase_exclusive_or_stable() {
        // Every (family, n <= 60, q <= 2h) resolves to exactly one partition.
        let mut families = Vec::new();
        for n in 2..=60 {
            families.extend(ClassicalFamily::new_sl(n));
            families.extend(ClassicalFamily::new_so(n));
            if n % 2 == 0 {
                families.extend(ClassicalFamily::new_sp(n));
            }
        }
        for fam in families {
            let lacing = fam.lacing();
            for q in 1..=2 * fam.coxeter_number() {
                let case = case_for(lacing, q);
                let r = orbit_q_classical(fam, q, case);
                assert!(r.is_ok(), "{} q={} {:?}: {:?}", fam, q, case, r.err());
            }
        }
    }

    #[test]
    fn dims_monotone_and_stabilizing() {
        for fam in [sl(9), so(9), so(10), sp(8)] {
            let lacing = fam.lacing();
            for case in [CaseTag::Principal, CaseTag::Coprincipal] {
                if case == CaseTag::Coprincipal && lacing == 1 {
                    continue;
                }
                let qs: Vec<u64> = (1..=3 * fam.coxeter_number())
                    .filter(|&q| case_for(lacing, q) == case)
                    .collect();
                let mut last = -1i64;
                for &q in &qs {
                    let r = orbit_q_classical(fam, q, case).unwrap();
                    assert!(r.dim >= last, "{} {:?} q={}", fam, case, q);
                    assert!(r.dim <= fam.dim_nilpotent_cone());
                    last = r.dim;
                    if q >= stable_threshold(fam, case) {
                        assert_eq!(r.dim, fam.dim_nilpotent_cone(), "{} {:?} q={}", fam, case, q);
                    }
                }
            }
        }
    }

    #[test]
    fn exceptional_lookups() {
        let r = orbit_q_exceptional(ct(Family::E, 6), 5, CaseTag::Principal).unwrap();
        assert_eq!(r.label.to_string(), "A4+A1");
        assert_eq!(r.dim, 62);

        let r = orbit_q_exceptional(ct(Family::F, 4), 6, CaseTag::Coprincipal).unwrap();
        assert_eq!(r.label.to_string(), "F4(a3)");
        assert_eq!(r.dim, 40);

        let r = orbit_q_exceptional(ct(Family::G, 2), 2, CaseTag::Principal).unwrap();
        assert_eq!(r.label.to_string(), "~A1");
        assert_eq!(r.dim, 8);

        // open-ended rows
        let r = orbit_q_exceptional(ct(Family::E, 8), 57, CaseTag::Principal).unwrap();
        assert_eq!(r.label.to_string(), "E8");
        assert_eq!(r.dim, 240);
    }

    #[test]
    fn extended_lookups() {
        let r = orbit_q_exceptional(ct(Family::G, 2), 3, CaseTag::Extended).unwrap();
        assert_eq!(r.dim, 10);
        let r = orbit_q_exceptional(ct(Family::G, 2), 6, CaseTag::Extended).unwrap();
        assert_eq!(r.dim, 12);
        let r = orbit_q_exceptional(ct(Family::F, 4), 4, CaseTag::Extended).unwrap();
        assert_eq!(r.dim, 40);
        // coprime q has no extended reading
        assert!(orbit_q_exceptional(ct(Family::G, 2), 5, CaseTag::Extended).is_err());
        // principal lookup must refuse non-coprime q
        assert!(orbit_q_exceptional(ct(Family::G, 2), 3, CaseTag::Principal).is_err());
    }

    #[test]
    fn dim_nq_examples() {
        assert_eq!(dim_nq(ct(Family::G, 2), 4, false).unwrap(), 10);
        assert_eq!(dim_nq(ct(Family::E, 7), 14, false).unwrap(), 124);
        assert_eq!(dim_nq(ct(Family::A, 4), 1, false).unwrap(), 0);
        // q = 4 for G2 is principal (gcd(4,3) = 1)
        assert_eq!(case_for(3, 4), CaseTag::Principal);
        // q = 6 for G2 routes to the coprincipal branch
        assert_eq!(dim_nq(ct(Family::G, 2), 6, false).unwrap(), 10);
        assert_eq!(dim_nq(ct(Family::G, 2), 6, true).unwrap(), 12);
    }

    #[test]
    fn e6_has_no_coprincipal_table() {
        assert!(exceptional_table(ct(Family::E, 6), CaseTag::Coprincipal).is_err());
        assert!(exceptional_table(ct(Family::F, 4), CaseTag::Coprincipal).is_ok());
    }

    #[test]
    fn table_row_counts() {
        assert_eq!(
            exceptional_table(ct(Family::F, 4), CaseTag::Coprincipal)
                .unwrap()
                .len(),
            7
        );
        assert_eq!(
            exceptional_table(ct(Family::E, 6), CaseTag::Principal)
                .unwrap()
                .len(),
            8
        );
        assert_eq!(
            exceptional_table(ct(Family::E, 8), CaseTag::Principal)
                .unwrap()
                .len(),
            16
        );
    }
}
