//! Independent matrix brute-force checks: explicit nilpotent representatives
//! built from partitions, measured adjoint and little-adjoint nilpotency
//! orders, centralizer nullity by exact elimination, and exhaustive search
//! for the maximal orbit inside the nilpotency-order cut.
//!
//! All linear algebra is exact. Representatives are accepted purely on two
//! checks: they satisfy the form condition of the realization, and their
//! matrix powers reproduce the rank profile of the partition. Nothing from
//! the closed-form orbit machinery enters the computations here.

pub mod linalg;

use std::fmt;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::Zero;

use crate::partitions::{
    orbit_dim_raw, partitions_of, ClassicalFamily, ClassicalOrbit, Partition,
};
use crate::rootsys::Rat;
use crate::{Error, Result};
use linalg::{imat_is_zero, imat_mul, qmat_inverse, qmat_mul, rank_bareiss, IMat, QMat};

/// Dense rational matrix with small entries.
pub type RMat = Vec<Vec<Rat>>;

fn rmat_zero(n: usize) -> RMat {
    vec![vec![Rat::zero(); n]; n]
}

fn rmat_from_int(m: &[Vec<i64>]) -> RMat {
    m.iter()
        .map(|r| r.iter().map(|&e| Ratio::from_integer(e)).collect())
        .collect()
}

fn rmat_bracket(a: &RMat, b: &RMat) -> RMat {
    let n = a.len();
    let mut out = rmat_zero(n);
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() && b[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                out[i][j] = out[i][j] + a[i][k] * b[k][j] - b[i][k] * a[k][j];
            }
        }
    }
    out
}

fn rmat_to_scaled_imat(m: &RMat) -> IMat {
    let mut scale: i64 = 1;
    for row in m {
        for e in row {
            scale = num_integer::lcm(scale, *e.denom());
        }
    }
    m.iter()
        .map(|row| {
            row.iter()
                .map(|e| BigInt::from(*e.numer() * (scale / *e.denom())))
                .collect()
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Matrix realizations of sl_n, so_n, sp_n
// ---------------------------------------------------------------------------

/// A concrete basis of the algebra inside the n x n matrices. The bilinear
/// form for so is the anti-diagonal of ones, for sp the anti-diagonal with
/// +1 in the upper half and -1 in the lower half, so upper triangular
/// representatives stay inside the algebra.
pub struct MatrixRealization {
    family: ClassicalFamily,
    n: usize,
    basis: Vec<Vec<Vec<i64>>>,
}

impl MatrixRealization {
    pub fn new(family: ClassicalFamily) -> Result<Self> {
        let n = family.n() as usize;
        let mut basis: Vec<Vec<Vec<i64>>> = Vec::new();
        let e = |i: usize, j: usize| -> Vec<Vec<i64>> {
            let mut m = vec![vec![0i64; n]; n];
            m[i][j] = 1;
            m
        };
        match family {
            ClassicalFamily::Sl(_) => {
                for i in 0..n {
                    for j in 0..n {
                        if i != j {
                            basis.push(e(i, j));
                        }
                    }
                }
                for i in 0..n - 1 {
                    let mut m = e(i, i);
                    m[i + 1][i + 1] = -1;
                    basis.push(m);
                }
            }
            ClassicalFamily::So(_) => {
                for i in 0..n {
                    for j in 0..n {
                        if i + j < n - 1 {
                            let mut m = e(i, j);
                            m[n - 1 - j][n - 1 - i] -= 1;
                            basis.push(m);
                        }
                    }
                }
            }
            ClassicalFamily::Sp(_) => {
                let eps = |i: usize| -> i64 {
                    if i < n / 2 {
                        1
                    } else {
                        -1
                    }
                };
                for i in 0..n {
                    for j in 0..n {
                        if i + j < n - 1 {
                            let mut m = e(i, j);
                            m[n - 1 - j][n - 1 - i] -= eps(i) * eps(j);
                            basis.push(m);
                        } else if i + j == n - 1 {
                            basis.push(e(i, j));
                        }
                    }
                }
            }
        }
        let real = MatrixRealization { family, n, basis };
        assert_eq!(real.basis.len() as i64, family.dim_g());
        for b in &real.basis {
            assert!(real.contains(&rmat_from_int(b)));
        }
        real.check_bracket_closure();
        Ok(real)
    }

    pub fn family(&self) -> ClassicalFamily {
        self.family
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Vec<i64>>] {
        &self.basis
    }

    /// The defining bilinear/symplectic form, `None` for sl.
    pub fn form_matrix(&self) -> Option<Vec<Vec<i64>>> {
        let n = self.n;
        match self.family {
            ClassicalFamily::Sl(_) => None,
            ClassicalFamily::So(_) => {
                let mut j = vec![vec![0i64; n]; n];
                for i in 0..n {
                    j[i][n - 1 - i] = 1;
                }
                Some(j)
            }
            ClassicalFamily::Sp(_) => {
                let mut j = vec![vec![0i64; n]; n];
                for i in 0..n {
                    j[i][n - 1 - i] = if i < n / 2 { 1 } else { -1 };
                }
                Some(j)
            }
        }
    }

    /// Membership: trace zero for sl, `x^T J + J x = 0` for so/sp.
    pub fn contains(&self, x: &RMat) -> bool {
        let n = self.n;
        match self.form_matrix() {
            None => {
                let tr: Rat = (0..n).map(|i| x[i][i]).sum();
                tr.is_zero()
            }
            Some(j) => {
                for a in 0..n {
                    for b in 0..n {
                        let mut acc = Rat::zero();
                        for k in 0..n {
                            acc += x[k][a] * Ratio::from_integer(j[k][b])
                                + Ratio::from_integer(j[a][k]) * x[k][b];
                        }
                        if !acc.is_zero() {
                            return false;
                        }
                    }
                }
                true
            }
        }
    }

    /// Expansion of a member in the basis: coordinates read off entry
    /// positions, with prefix sums along the diagonal for sl.
    pub fn coords(&self, x: &RMat) -> Vec<Rat> {
        let n = self.n;
        debug_assert!(self.contains(x));
        let mut out = Vec::with_capacity(self.dim());
        match self.family {
            ClassicalFamily::Sl(_) => {
                for i in 0..n {
                    for j in 0..n {
                        if i != j {
                            out.push(x[i][j]);
                        }
                    }
                }
                let mut prefix = Rat::zero();
                for i in 0..n - 1 {
                    prefix += x[i][i];
                    out.push(prefix);
                }
            }
            ClassicalFamily::So(_) => {
                for i in 0..n {
                    for j in 0..n {
                        if i + j < n - 1 {
                            out.push(x[i][j]);
                        }
                    }
                }
            }
            ClassicalFamily::Sp(_) => {
                for i in 0..n {
                    for j in 0..n {
                        if i + j <= n - 1 {
                            out.push(x[i][j]);
                        }
                    }
                }
            }
        }
        out
    }

    fn reconstruct(&self, coords: &[Rat]) -> RMat {
        let n = self.n;
        let mut out = rmat_zero(n);
        for (c, b) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for i in 0..n {
                for j in 0..n {
                    if b[i][j] != 0 {
                        out[i][j] += *c * Ratio::from_integer(b[i][j]);
                    }
                }
            }
        }
        out
    }

    fn check_bracket_closure(&self) {
        let d = self.dim();
        for i in 0..d {
            for j in i + 1..d {
                let z = rmat_bracket(
                    &rmat_from_int(&self.basis[i]),
                    &rmat_from_int(&self.basis[j]),
                );
                assert!(
                    self.contains(&z),
                    "bracket of basis elements {} and {} escapes the algebra",
                    i,
                    j
                );
                let back = self.reconstruct(&self.coords(&z));
                assert_eq!(back, z, "basis expansion failed at ({}, {})", i, j);
            }
        }
    }
}

impl fmt::Debug for MatrixRealization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MatrixRealization({}, dim {})", self.family, self.dim())
    }
}

// ---------------------------------------------------------------------------
// Nilpotent representatives
// ---------------------------------------------------------------------------

/// An explicit nilpotent element of the realization with prescribed Jordan
/// type, validated by the rank profile of its powers and the form condition.
#[derive(Debug, Clone)]
pub struct NilpotentRep {
    pub family: ClassicalFamily,
    pub partition: Partition,
    pub matrix: RMat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Piece {
    /// One Jordan string carrying a form on its own span.
    Single(u64),
    /// Two strings of equal length paired hyperbolically.
    Pair(u64),
}

impl Piece {
    fn size(self) -> usize {
        match self {
            Piece::Single(m) => m as usize,
            Piece::Pair(m) => 2 * m as usize,
        }
    }
}

/// Group the parts into form-carrying pieces: parts of the constrained
/// parity pair with an equal part, the rest pair up where possible (so) or
/// stand alone (sp).
fn group_pieces(family: ClassicalFamily, p: &Partition, reverse: bool) -> Vec<Piece> {
    let mut pieces = Vec::new();
    let mut parts = p.parts().to_vec();
    if reverse {
        parts.reverse();
    }
    let pair_parity = match family {
        ClassicalFamily::So(_) => 0,
        ClassicalFamily::Sp(_) => 1,
        ClassicalFamily::Sl(_) => unreachable!(),
    };
    let mut i = 0;
    while i < parts.len() {
        let v = parts[i];
        let mut mult = 1;
        while i + mult < parts.len() && parts[i + mult] == v {
            mult += 1;
        }
        if v % 2 == pair_parity {
            assert!(mult % 2 == 0, "parity multiplicity violated for part {}", v);
            for _ in 0..mult / 2 {
                pieces.push(Piece::Pair(v));
            }
        } else {
            match family {
                ClassicalFamily::So(_) => {
                    for _ in 0..mult / 2 {
                        pieces.push(Piece::Pair(v));
                    }
                    if mult % 2 == 1 {
                        pieces.push(Piece::Single(v));
                    }
                }
                ClassicalFamily::Sp(_) => {
                    for _ in 0..mult {
                        pieces.push(Piece::Single(v));
                    }
                }
                ClassicalFamily::Sl(_) => unreachable!(),
            }
        }
        i += mult;
    }
    pieces
}

fn neg_pow(k: u64) -> i64 {
    if k % 2 == 1 {
        -1
    } else {
        1
    }
}

/// Build the standard representative: plain Jordan blocks for sl; for so/sp
/// Jordan strings against a block form, conjugated into the anti-diagonal
/// realization by an explicit rational isometry.
pub fn nilpotent_from_partition(
    family: ClassicalFamily,
    partition: &Partition,
) -> Result<NilpotentRep> {
    build_rep(family, partition, false, false)
}

fn build_rep(
    family: ClassicalFamily,
    partition: &Partition,
    reverse_pieces: bool,
    negate: bool,
) -> Result<NilpotentRep> {
    if !family.admits(partition) {
        return Err(Error::InvalidPartition(format!(
            "{} is not a nilpotent Jordan type for {}",
            partition, family
        )));
    }
    let n = family.n() as usize;
    let sign = if negate { -1i64 } else { 1 };

    let matrix: RMat = match family {
        ClassicalFamily::Sl(_) => {
            let mut x = vec![vec![0i64; n]; n];
            let mut off = 0usize;
            for &m in partition.parts() {
                for i in 0..m as usize - 1 {
                    x[off + i][off + i + 1] = sign;
                }
                off += m as usize;
            }
            rmat_from_int(&x)
        }
        _ => so_sp_rep(family, partition, reverse_pieces, sign),
    };

    let rep = NilpotentRep {
        family,
        partition: partition.clone(),
        matrix,
    };
    validate_rep(&rep)?;
    Ok(rep)
}

/// The so/sp construction. Strings carry the pairing
/// `G(e_i, e_{m+1-i}) = c (-1)^i` (1-indexed within the string), which the
/// shift `e_i -> e_{i-1}` leaves invariant; it is symmetric for odd string
/// length and alternating for even length. A hyperbolic basis of the block
/// form is then matched against one of the target anti-diagonal form.
fn so_sp_rep(
    family: ClassicalFamily,
    partition: &Partition,
    reverse_pieces: bool,
    sign: i64,
) -> RMat {
    let n = family.n() as usize;
    let pieces = group_pieces(family, partition, reverse_pieces);

    let mut xg = vec![vec![0i64; n]; n];
    let mut offsets = Vec::new();
    let mut off = 0usize;
    for piece in &pieces {
        offsets.push(off);
        match piece {
            Piece::Single(m) => {
                for i in 0..*m as usize - 1 {
                    xg[off + i][off + i + 1] = sign;
                }
            }
            Piece::Pair(m) => {
                let m = *m as usize;
                for s in 0..2 {
                    for i in 0..m - 1 {
                        xg[off + s * m + i][off + s * m + i + 1] = sign;
                    }
                }
            }
        }
        off += piece.size();
    }
    assert_eq!(off, n);

    // Hyperbolic pairs (u, v) with G(u, v) = 1, plus middle lines of norm
    // +1 or -1 for the odd-length so strings.
    let mut pairs: Vec<(Vec<Rat>, Vec<Rat>)> = Vec::new();
    let mut middles: Vec<(usize, i64)> = Vec::new();

    let single_count = pieces
        .iter()
        .filter(|p| matches!(p, Piece::Single(_)))
        .count();
    if matches!(family, ClassicalFamily::So(_)) {
        assert_eq!(single_count % 2, n % 2);
    }
    let mut single_seen = 0usize;

    let unit = |i: usize, c: i64| -> Vec<Rat> {
        let mut v = vec![Rat::zero(); n];
        v[i] = Ratio::from_integer(c);
        v
    };

    for (piece, &off) in pieces.iter().zip(&offsets) {
        match piece {
            Piece::Pair(m) => {
                let m = *m as usize;
                for i in 0..m {
                    let g = neg_pow(i as u64 + 1);
                    pairs.push((unit(off + i, 1), unit(off + 2 * m - 1 - i, g)));
                }
            }
            Piece::Single(m) => {
                let m = *m as usize;
                let c = match family {
                    ClassicalFamily::So(_) => {
                        // middle norm is c * (-1)^((m+1)/2); steer it to the
                        // assigned target so middles pair into hyperbolic
                        // planes, with one leftover +1 when n is odd
                        let want = if n % 2 == 1 && single_seen == 0 {
                            1
                        } else {
                            let idx = single_seen - (n % 2);
                            if idx % 2 == 0 {
                                1
                            } else {
                                -1
                            }
                        };
                        want * neg_pow((m as u64 + 1) / 2)
                    }
                    _ => 1,
                };
                for i in 0..m / 2 {
                    let g = c * neg_pow(i as u64 + 1);
                    pairs.push((unit(off + i, 1), unit(off + m - 1 - i, g)));
                }
                if m % 2 == 1 {
                    let norm = c * neg_pow((m as u64 + 1) / 2);
                    middles.push((off + m / 2, norm));
                    single_seen += 1;
                }
            }
        }
    }

    // Couple up (+1, -1) middles into hyperbolic pairs; one lone +1 middle
    // remains exactly when n is odd.
    let mut lone_middle: Option<Vec<Rat>> = None;
    let mut middle_iter = middles.into_iter();
    if n % 2 == 1 {
        let (idx, norm) = middle_iter.next().expect("odd n needs a middle");
        assert_eq!(norm, 1);
        lone_middle = Some(unit(idx, 1));
    }
    let rest: Vec<(usize, i64)> = middle_iter.collect();
    assert_eq!(rest.len() % 2, 0);
    for duo in rest.chunks(2) {
        let (a, na) = duo[0];
        let (b, nb) = duo[1];
        assert_eq!((na, nb), (1, -1), "middle couple must be (+1, -1)");
        let half = Ratio::new(1, 2);
        let mut u = vec![Rat::zero(); n];
        u[a] = half;
        u[b] = half;
        let mut v = vec![Rat::zero(); n];
        v[a] = Ratio::from_integer(1);
        v[b] = Ratio::from_integer(-1);
        pairs.push((u, v));
    }
    assert_eq!(pairs.len(), n / 2);

    // P sends the target hyperbolic basis to the structured one:
    // column k = u_k, column n-1-k = v_k, middle column = lone middle.
    // Then P^T G P = J and P^{-1} X_G P lies in the J-realization.
    let mut p_cols: Vec<Vec<Rat>> = vec![vec![Rat::zero(); n]; n];
    for (k, (u, v)) in pairs.iter().enumerate() {
        p_cols[k] = u.clone();
        p_cols[n - 1 - k] = v.clone();
    }
    if let Some(w) = lone_middle {
        p_cols[n / 2] = w;
    }
    let p_mat: QMat = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    BigRational::new(
                        BigInt::from(*p_cols[j][i].numer()),
                        BigInt::from(*p_cols[j][i].denom()),
                    )
                })
                .collect()
        })
        .collect();
    let p_inv = qmat_inverse(&p_mat);
    let xg_q: QMat = xg
        .iter()
        .map(|r| {
            r.iter()
                .map(|&e| BigRational::from(BigInt::from(e)))
                .collect()
        })
        .collect();
    let conj = qmat_mul(&qmat_mul(&p_inv, &xg_q), &p_mat);
    conj.iter()
        .map(|row| {
            row.iter()
                .map(|e| {
                    let num: i64 = e.numer().try_into().expect("small numerator");
                    let den: i64 = e.denom().try_into().expect("small denominator");
                    Ratio::new(num, den)
                })
                .collect()
        })
        .collect()
}

/// Rank profile check: `rank(x^k) = sum_i max(lambda_i - k, 0)` for every k,
/// plus membership in the realization.
fn validate_rep(rep: &NilpotentRep) -> Result<()> {
    let real = MatrixRealization::new(rep.family)?;
    if !real.contains(&rep.matrix) {
        return Err(Error::Internal(format!(
            "representative of {} for {} escapes the algebra",
            rep.partition, rep.family
        )));
    }
    let xi = rmat_to_scaled_imat(&rep.matrix);
    let mut power = xi.clone();
    let mut k = 1u64;
    loop {
        let expected: i64 = rep
            .partition
            .parts()
            .iter()
            .map(|&l| l.saturating_sub(k) as i64)
            .sum();
        let got = rank_bareiss(power.clone()) as i64;
        if got != expected {
            return Err(Error::Internal(format!(
                "rank(x^{}) = {} but partition {} demands {}",
                k, got, rep.partition, expected
            )));
        }
        if expected == 0 {
            break;
        }
        power = imat_mul(&power, &xi);
        k += 1;
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Nilpotency orders and centralizer nullity
// ---------------------------------------------------------------------------

/// Smallest `N` with `(ad x)^N = 0` on the algebra, measured by iterated
/// brackets against every basis element. The zero matrix has order 1.
pub fn ad_nilpotency_order(real: &MatrixRealization, rep: &NilpotentRep) -> u32 {
    let n = real.n;
    let xi = rmat_to_scaled_imat(&rep.matrix);
    let mut max_steps = 1u32;
    for b in real.basis() {
        let mut c: IMat = b
            .iter()
            .map(|r| r.iter().map(|&e| BigInt::from(e)).collect())
            .collect();
        let mut steps = 0u32;
        while !imat_is_zero(&c) {
            let mut next = vec![vec![BigInt::zero(); n]; n];
            for i in 0..n {
                for k in 0..n {
                    if xi[i][k].is_zero() && c[i][k].is_zero() {
                        continue;
                    }
                    for j in 0..n {
                        let t = &xi[i][k] * &c[k][j] - &c[i][k] * &xi[k][j];
                        if !t.is_zero() {
                            next[i][j] += t;
                        }
                    }
                }
            }
            c = next;
            steps += 1;
        }
        max_steps = max_steps.max(steps.max(1));
    }
    max_steps
}

/// Smallest `N` with `pi(x)^N = 0` in the little adjoint representation:
/// the defining vector representation for so(odd), and the action on the
/// second exterior power for sp. The invariant form line inside the exterior
/// square is annihilated, so the order agrees with the one on its
/// complement.
pub fn little_adjoint_order(rep: &NilpotentRep) -> Result<u32> {
    let n = rep.family.n() as usize;
    let xi = rmat_to_scaled_imat(&rep.matrix);
    let m: IMat = match rep.family {
        ClassicalFamily::So(nn) if nn % 2 == 1 => xi,
        ClassicalFamily::Sp(_) => {
            let mut idx = Vec::new();
            for a in 0..n {
                for b in a + 1..n {
                    idx.push((a, b));
                }
            }
            let dim = idx.len();
            let lookup = |a: usize, b: usize| -> (usize, i64) {
                let (p, s) = if a < b { ((a, b), 1) } else { ((b, a), -1) };
                (idx.iter().position(|&q| q == p).unwrap(), s)
            };
            let mut w = vec![vec![BigInt::zero(); dim]; dim];
            for (col, &(a, b)) in idx.iter().enumerate() {
                // x(e_a ^ e_b) = (x e_a) ^ e_b + e_a ^ (x e_b)
                for i in 0..n {
                    if !xi[i][a].is_zero() && i != b {
                        let (row, s) = lookup(i, b);
                        w[row][col] += &xi[i][a] * BigInt::from(s);
                    }
                    if !xi[i][b].is_zero() && i != a {
                        let (row, s) = lookup(a, i);
                        w[row][col] += &xi[i][b] * BigInt::from(s);
                    }
                }
            }
            w
        }
        _ => {
            return Err(Error::Unsupported(format!(
                "little adjoint order only applies to so(odd) and sp, got {}",
                rep.family
            )))
        }
    };
    let mut power = m.clone();
    let mut order = 1u32;
    while !imat_is_zero(&power) {
        power = imat_mul(&power, &m);
        order += 1;
    }
    Ok(order)
}

/// Nullity of `z -> [x, z]` on the algebra, by exact integer elimination.
pub fn centralizer_nullity(real: &MatrixRealization, rep: &NilpotentRep) -> i64 {
    let d = real.dim();
    let mut columns: Vec<Vec<Rat>> = Vec::with_capacity(d);
    for b in real.basis() {
        let z = rmat_bracket(&rep.matrix, &rmat_from_int(b));
        columns.push(real.coords(&z));
    }
    let mut scale: i64 = 1;
    for col in &columns {
        for e in col {
            scale = num_integer::lcm(scale, *e.denom());
        }
    }
    let mat: IMat = (0..d)
        .map(|r| {
            (0..d)
                .map(|c| {
                    let e = columns[c][r];
                    BigInt::from(*e.numer() * (scale / *e.denom()))
                })
                .collect()
        })
        .collect();
    d as i64 - rank_bareiss(mat) as i64
}

// ---------------------------------------------------------------------------
// Exhaustive orbit search
// ---------------------------------------------------------------------------

/// Which nilpotency measurement cuts out the variety searched.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchCase {
    /// `N_q = {x : (ad x)^{2q} = 0}`
    Principal,
    /// `{}^L N_{q/2} = {x : pi(x)^q = 0}` for the lacing-2 families
    Coprincipal,
}

/// Precomputed representative data for every Jordan type of a family.
pub struct Oracle {
    family: ClassicalFamily,
    real: MatrixRealization,
    entries: Vec<OracleEntry>,
}

pub struct OracleEntry {
    pub partition: Partition,
    pub ad_order: u32,
    pub little_order: Option<u32>,
    pub orbit_dim: i64,
}

impl Oracle {
    pub fn new(family: ClassicalFamily) -> Result<Self> {
        let real = MatrixRealization::new(family)?;
        let wants_little = family.lacing() == 2;
        let mut entries = Vec::new();
        for partition in partitions_of(family.n()) {
            if !family.admits(&partition) {
                continue;
            }
            let rep = nilpotent_from_partition(family, &partition)?;
            let ad_order = ad_nilpotency_order(&real, &rep);
            let little_order = if wants_little {
                Some(little_adjoint_order(&rep)?)
            } else {
                None
            };
            entries.push(OracleEntry {
                orbit_dim: orbit_dim_raw(family, &partition),
                partition,
                ad_order,
                little_order,
            });
        }
        Ok(Oracle {
            family,
            real,
            entries,
        })
    }

    pub fn family(&self) -> ClassicalFamily {
        self.family
    }

    pub fn realization(&self) -> &MatrixRealization {
        &self.real
    }

    pub fn entries(&self) -> &[OracleEntry] {
        &self.entries
    }

    fn survivors(&self, q: u64, case: SearchCase) -> Result<Vec<&OracleEntry>> {
        let ok: Vec<&OracleEntry> = match case {
            SearchCase::Principal => self
                .entries
                .iter()
                .filter(|e| e.ad_order as u64 <= 2 * q)
                .collect(),
            SearchCase::Coprincipal => {
                if self.family.lacing() != 2 {
                    return Err(Error::Unsupported(format!(
                        "coprincipal search needs lacing 2, got {}",
                        self.family
                    )));
                }
                if q % 2 != 0 {
                    return Err(Error::Unsupported(format!(
                        "coprincipal search needs even q, got {}",
                        q
                    )));
                }
                self.entries
                    .iter()
                    .filter(|e| e.little_order.expect("precomputed") as u64 <= q)
                    .collect()
            }
        };
        Ok(ok)
    }

    /// The unique maximal-dimension orbit inside the cut. A tie is an
    /// error: it would contradict irreducibility of the variety.
    pub fn max_orbit(&self, q: u64, case: SearchCase) -> Result<ClassicalOrbit> {
        let survivors = self.survivors(q, case)?;
        let best = survivors
            .iter()
            .map(|e| e.orbit_dim)
            .max()
            .ok_or_else(|| Error::Internal("empty search cut".into()))?;
        let winners: Vec<&&OracleEntry> = survivors
            .iter()
            .filter(|e| e.orbit_dim == best)
            .collect();
        if winners.len() != 1 {
            return Err(Error::NonUniqueMax(format!(
                "{} q={} {:?}: {}",
                self.family,
                q,
                case,
                winners
                    .iter()
                    .map(|e| e.partition.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            )));
        }
        ClassicalOrbit::new(self.family, winners[0].partition.clone())
    }
}

/// One-shot search; builds the oracle for the family first.
pub fn max_orbit_in_nq(
    family: ClassicalFamily,
    q: u64,
    case: SearchCase,
) -> Result<ClassicalOrbit> {
    Oracle::new(family)?.max_orbit(q, case)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbits::{orbit_q_classical, CaseTag, OrbitLabel};

    fn part(v: &[u64]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn sl(n: u64) -> ClassicalFamily {
        ClassicalFamily::new_sl(n).unwrap()
    }
    fn so(n: u64) -> ClassicalFamily {
        ClassicalFamily::new_so(n).unwrap()
    }
    fn sp(n: u64) -> ClassicalFamily {
        ClassicalFamily::new_sp(n).unwrap()
    }

    #[test]
    fn realization_dims() {
        assert_eq!(MatrixRealization::new(sl(4)).unwrap().dim(), 15);
        assert_eq!(MatrixRealization::new(so(7)).unwrap().dim(), 21);
        assert_eq!(MatrixRealization::new(sp(6)).unwrap().dim(), 21);
    }

    #[test]
    fn representative_rank_profiles() {
        nilpotent_from_partition(sl(3), &part(&[2, 1])).unwrap();
        nilpotent_from_partition(so(7), &part(&[3, 3, 1])).unwrap();
        nilpotent_from_partition(so(9), &part(&[5, 3, 1])).unwrap();
        nilpotent_from_partition(so(8), &part(&[5, 1, 1, 1])).unwrap();
        nilpotent_from_partition(sp(4), &part(&[2, 2])).unwrap();
        nilpotent_from_partition(sp(6), &part(&[4, 2])).unwrap();
        nilpotent_from_partition(sp(6), &part(&[3, 3])).unwrap();
        assert!(nilpotent_from_partition(so(7), &part(&[4, 3])).is_err());
    }

    #[test]
    fn every_admissible_partition_has_a_representative() {
        for fam in [sl(5), so(7), so(8), sp(6)] {
            for p in partitions_of(fam.n()) {
                if fam.admits(&p) {
                    nilpotent_from_partition(fam, &p).unwrap_or_else(|e| {
                        panic!("{} {}: {}", fam, p, e);
                    });
                }
            }
        }
    }

    #[test]
    fn ad_orders() {
        let real = MatrixRealization::new(sl(2)).unwrap();
        let rep = nilpotent_from_partition(sl(2), &part(&[2])).unwrap();
        assert_eq!(ad_nilpotency_order(&real, &rep), 3);

        let real = MatrixRealization::new(sl(3)).unwrap();
        let rep = nilpotent_from_partition(sl(3), &part(&[2, 1])).unwrap();
        assert_eq!(ad_nilpotency_order(&real, &rep), 3);

        // the zero matrix has order 1 by convention
        let rep = nilpotent_from_partition(sl(3), &part(&[1, 1, 1])).unwrap();
        assert_eq!(ad_nilpotency_order(&real, &rep), 1);
    }

    #[test]
    fn little_orders() {
        let rep = nilpotent_from_partition(so(7), &part(&[3, 3, 1])).unwrap();
        assert_eq!(little_adjoint_order(&rep).unwrap(), 3);
        let rep = nilpotent_from_partition(sp(4), &part(&[2, 2])).unwrap();
        assert_eq!(little_adjoint_order(&rep).unwrap(), 3);
        let rep = nilpotent_from_partition(sp(2), &part(&[2])).unwrap();
        assert_eq!(little_adjoint_order(&rep).unwrap(), 1);
        let rep = nilpotent_from_partition(sl(3), &part(&[3])).unwrap();
        assert!(little_adjoint_order(&rep).is_err());
    }

    #[test]
    fn nullity_examples() {
        let real = MatrixRealization::new(sl(4)).unwrap();
        let rep = nilpotent_from_partition(sl(4), &part(&[2, 2])).unwrap();
        assert_eq!(centralizer_nullity(&real, &rep), 7);

        let real = MatrixRealization::new(so(7)).unwrap();
        let rep = nilpotent_from_partition(so(7), &part(&[7])).unwrap();
        assert_eq!(centralizer_nullity(&real, &rep), 3);
    }

    #[test]
    fn nullity_matches_formula_n6() {
        for fam in [sl(5), so(6), sp(6)] {
            let real = MatrixRealization::new(fam).unwrap();
            for p in partitions_of(fam.n()) {
                if !fam.admits(&p) {
                    continue;
                }
                let rep = nilpotent_from_partition(fam, &p).unwrap();
                assert_eq!(
                    centralizer_nullity(&real, &rep),
                    crate::partitions::centralizer_dim_raw(fam, &p),
                    "{} {}",
                    fam,
                    p
                );
            }
        }
    }

    #[test]
    fn max_orbit_examples() {
        let orbit = max_orbit_in_nq(sl(7), 3, SearchCase::Principal).unwrap();
        assert_eq!(orbit.partition(), &part(&[3, 3, 1]));

        let orbit = max_orbit_in_nq(sp(4), 2, SearchCase::Coprincipal).unwrap();
        let expected = orbit_q_classical(sp(4), 2, CaseTag::Coprincipal).unwrap();
        match expected.label {
            OrbitLabel::Classical(o) => assert_eq!(&orbit, &o),
            _ => unreachable!(),
        }

        let orbit = max_orbit_in_nq(sl(2), 1, SearchCase::Principal).unwrap();
        assert_eq!(orbit.partition(), &part(&[1, 1]));
    }

    #[test]
    fn ad_order_independent_of_construction() {
        for (fam, p) in [
            (so(9), part(&[5, 3, 1])),
            (so(7), part(&[3, 3, 1])),
            (sp(6), part(&[2, 2, 2])),
            (sp(8), part(&[4, 2, 1, 1])),
        ] {
            let real = MatrixRealization::new(fam).unwrap();
            let a = build_rep(fam, &p, false, false).unwrap();
            let b = build_rep(fam, &p, true, true).unwrap();
            assert_ne!(a.matrix, b.matrix);
            assert_eq!(
                ad_nilpotency_order(&real, &a),
                ad_nilpotency_order(&real, &b),
                "{} {}",
                fam,
                p
            );
            assert_eq!(
                little_adjoint_order(&a).unwrap(),
                little_adjoint_order(&b).unwrap()
            );
        }
    }
}
