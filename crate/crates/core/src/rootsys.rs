//! Finite root systems of the simple types, generated from the Cartan matrix
//! with the invariant form normalized so that long roots have squared length 2.
//!
//! Simple roots are numbered in the Bourbaki convention throughout:
//! for B the last simple root is short, for C the last is long, for F4 the
//! roots 1, 2 are long and 3, 4 short, for G2 the root 1 is short.
//! The Cartan matrix is stored as `a[i][j] = <alpha_j, alpha_i^v>`, so the
//! simple reflection acts on root coordinates by
//! `s_i(beta) = beta - (sum_j a[i][j] beta_j) alpha_i`.

use std::collections::HashMap;
use std::fmt;

use num_rational::Ratio;
use num_traits::Zero;

use crate::{Error, Result};

/// Exact rational scalar used for all pairings and weight coordinates.
pub type Rat = Ratio<i64>;

fn rat(n: i64) -> Rat {
    Ratio::from_integer(n)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

/// A simple type `X_l` within the classification bounds. The bounds keep the
/// algebra simple and the matrix identifications sl/so/sp unambiguous.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CartanType {
    family: Family,
    rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(CartanType { family, rank })
        } else {
            Err(Error::InvalidRank {
                family: family.letter(),
                rank,
            })
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// The lacing number: maximal edge multiplicity of the Dynkin diagram.
    pub fn lacing(&self) -> u64 {
        match self.family {
            Family::A | Family::D | Family::E => 1,
            Family::B | Family::C | Family::F => 2,
            Family::G => 3,
        }
    }

    /// Langlands dual type: B and C swap, everything else is fixed.
    pub fn langlands_dual(self) -> Self {
        let family = match self.family {
            Family::B => Family::C,
            Family::C => Family::B,
            f => f,
        };
        CartanType {
            family,
            rank: self.rank,
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let letter = chars
            .next()
            .ok_or_else(|| Error::ParseType(s.to_string()))?;
        let family = match letter.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return Err(Error::ParseType(s.to_string())),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::ParseType(s.to_string()))?;
        CartanType::new(family, rank)
    }

    pub fn is_exceptional(&self) -> bool {
        matches!(self.family, Family::E | Family::F | Family::G)
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

/// A root, stored by its integer coordinates over the simple-root basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Root {
    coords: Vec<i64>,
}

impl Root {
    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    /// Sum of the simple-root coefficients.
    pub fn height(&self) -> i64 {
        self.coords.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0)
    }

    pub fn negated(&self) -> Root {
        Root {
            coords: self.coords.iter().map(|&c| -c).collect(),
        }
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, "]")
    }
}

/// Weight with exact rational coordinates over the simple-root basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Weight {
    coords: Vec<Rat>,
}

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight {
            coords: vec![Rat::zero(); rank],
        }
    }

    pub fn from_root(r: &Root) -> Self {
        Weight {
            coords: r.coords.iter().map(|&c| rat(c)).collect(),
        }
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, c: Rat) -> Weight {
        Weight {
            coords: self.coords.iter().map(|a| a * c).collect(),
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, "]")
    }
}

/// A fully built root system: all roots, the normalized form, Weyl vector and
/// covector, highest (short) root, Coxeter data and exponents.
///
/// Immutable after construction; share freely across threads.
#[derive(Debug, Clone)]
pub struct RootSystem {
    ct: CartanType,
    cartan: Vec<Vec<i64>>,
    symmetrizers: Vec<Rat>,
    gram: Vec<Vec<Rat>>,
    roots: Vec<Root>,
    positive: Vec<Root>,
    index: HashMap<Vec<i64>, usize>,
    is_long: Vec<bool>,
    rho: Weight,
    rho_check: Weight,
    theta: Root,
    theta_short: Root,
    exponents: Vec<u64>,
    coxeter: u64,
    dual_coxeter: u64,
}

impl RootSystem {
    /// Generate the root system by closing the simple roots under the simple
    /// reflections. No root list is hardcoded.
    pub fn build(ct: CartanType) -> RootSystem {
        let rank = ct.rank();
        let cartan = cartan_matrix(ct);
        let symmetrizers = symmetrizers(ct);

        let mut gram = vec![vec![Rat::zero(); rank]; rank];
        for i in 0..rank {
            for j in 0..rank {
                gram[i][j] = symmetrizers[i] * rat(cartan[i][j]);
            }
        }
        for i in 0..rank {
            for j in 0..rank {
                assert_eq!(gram[i][j], gram[j][i], "symmetrizers must symmetrize");
            }
        }

        // Breadth-first closure under the simple reflections.
        let mut seen: HashMap<Vec<i64>, usize> = HashMap::new();
        let mut queue: Vec<Vec<i64>> = Vec::new();
        for i in 0..rank {
            let mut c = vec![0i64; rank];
            c[i] = 1;
            seen.insert(c.clone(), 0);
            queue.push(c);
        }
        while let Some(c) = queue.pop() {
            for i in 0..rank {
                let pairing: i64 = (0..rank).map(|j| cartan[i][j] * c[j]).sum();
                let mut refl = c.clone();
                refl[i] -= pairing;
                if !seen.contains_key(&refl) {
                    seen.insert(refl.clone(), 0);
                    queue.push(refl.clone());
                }
            }
        }

        let mut coords: Vec<Vec<i64>> = seen.into_keys().collect();
        coords.sort_by_key(|c| (c.iter().sum::<i64>(), c.clone()));
        let roots: Vec<Root> = coords.into_iter().map(|coords| Root { coords }).collect();

        let mut index = HashMap::new();
        for (i, r) in roots.iter().enumerate() {
            index.insert(r.coords.clone(), i);
        }

        // Positive/negative dichotomy must hold for every generated root.
        for r in &roots {
            let pos = r.coords.iter().all(|&c| c >= 0);
            let neg = r.coords.iter().all(|&c| c <= 0);
            assert!(pos ^ neg, "root {} violates the sign dichotomy", r);
        }
        let positive: Vec<Root> = roots.iter().filter(|r| r.is_positive()).cloned().collect();
        assert_eq!(2 * positive.len(), roots.len());

        let form =
            |a: &[i64], b: &[i64]| -> Rat {
                let mut acc = Rat::zero();
                for i in 0..rank {
                    for j in 0..rank {
                        acc += rat(a[i]) * gram[i][j] * rat(b[j]);
                    }
                }
                acc
            };

        let lacing = ct.lacing() as i64;
        let long_sq = rat(2);
        let short_sq = Rat::new(2, lacing);
        let mut is_long = Vec::with_capacity(roots.len());
        for r in &roots {
            let sq = form(&r.coords, &r.coords);
            if sq == long_sq {
                is_long.push(true);
            } else if sq == short_sq {
                is_long.push(false);
            } else {
                panic!("unexpected root length {} for {}", sq, r);
            }
        }

        // theta: unique root of maximal height; theta_short likewise among the
        // short roots (equal to theta in the simply-laced case).
        let max_h = positive.iter().map(Root::height).max().unwrap();
        let tallest: Vec<&Root> = positive.iter().filter(|r| r.height() == max_h).collect();
        assert_eq!(tallest.len(), 1, "highest root must be unique");
        let theta = tallest[0].clone();

        let theta_short = if lacing == 1 {
            theta.clone()
        } else {
            let short_pos: Vec<&Root> = positive
                .iter()
                .filter(|r| !is_long[index[&r.coords]])
                .collect();
            let max_hs = short_pos.iter().map(|r| r.height()).max().unwrap();
            let tallest_s: Vec<&&Root> = short_pos
                .iter()
                .filter(|r| r.height() == max_hs)
                .collect();
            assert_eq!(tallest_s.len(), 1, "highest short root must be unique");
            (*tallest_s[0]).clone()
        };

        // rho = half sum of positive roots, rho_check = half sum of positive
        // coroots, both expressed in the simple-root basis.
        let mut rho = Weight::zero(rank);
        let mut rho_check = Weight::zero(rank);
        let half = Rat::new(1, 2);
        for r in &positive {
            let w = Weight::from_root(r);
            rho = rho.add(&w.scale(half));
            let sq = form(&r.coords, &r.coords);
            rho_check = rho_check.add(&w.scale(rat(2) / sq * half));
        }
        for i in 0..rank {
            let alpha = Root {
                coords: {
                    let mut c = vec![0i64; rank];
                    c[i] = 1;
                    c
                },
            };
            let p = pairing_impl(&gram, &rho, &alpha);
            assert_eq!(p, rat(1), "rho must pair to 1 with every simple coroot");
        }

        let coxeter = (theta.height() + 1) as u64;
        let dual_coxeter = {
            let p = pairing_impl(&gram, &rho, &theta);
            assert!(p.is_integer());
            (p.to_integer() + 1) as u64
        };

        // Exponents via Steinberg: the height-multiplicity sequence is the
        // dual partition of the exponents.
        let mut mult = vec![0u64; max_h as usize];
        for r in &positive {
            mult[(r.height() - 1) as usize] += 1;
        }
        for w in mult.windows(2) {
            assert!(w[0] >= w[1], "height multiplicities must weakly decrease");
        }
        let mut exponents = dual_of_decreasing(&mult);
        exponents.reverse();
        assert_eq!(exponents.len(), rank);

        RootSystem {
            ct,
            cartan,
            symmetrizers,
            gram,
            roots,
            positive,
            index,
            is_long,
            rho,
            rho_check,
            theta,
            theta_short,
            exponents,
            coxeter,
            dual_coxeter,
        }
    }

    pub fn cartan_type(&self) -> CartanType {
        self.ct
    }

    pub fn rank(&self) -> usize {
        self.ct.rank()
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn symmetrizers(&self) -> &[Rat] {
        &self.symmetrizers
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    /// dim g = |roots| + rank.
    pub fn dim_g(&self) -> i64 {
        (self.roots.len() + self.ct.rank()) as i64
    }

    /// Dimension of the nilpotent cone, dim g - rank.
    pub fn dim_nilpotent_cone(&self) -> i64 {
        self.roots.len() as i64
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    pub fn rho_check(&self) -> &Weight {
        &self.rho_check
    }

    pub fn theta(&self) -> &Root {
        &self.theta
    }

    pub fn theta_short(&self) -> &Root {
        &self.theta_short
    }

    pub fn lacing(&self) -> u64 {
        self.ct.lacing()
    }

    pub fn coxeter_number(&self) -> u64 {
        self.coxeter
    }

    pub fn dual_coxeter_number(&self) -> u64 {
        self.dual_coxeter
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    pub fn contains(&self, r: &Root) -> bool {
        self.index.contains_key(&r.coords)
    }

    /// Height of a root, with membership validated.
    pub fn height(&self, r: &Root) -> Result<i64> {
        if !self.contains(r) {
            return Err(Error::NotARoot(r.to_string()));
        }
        Ok(r.height())
    }

    pub fn is_long(&self, r: &Root) -> Result<bool> {
        let idx = self
            .index
            .get(&r.coords)
            .ok_or_else(|| Error::NotARoot(r.to_string()))?;
        Ok(self.is_long[*idx])
    }

    /// The normalized invariant form on weights.
    pub fn form(&self, a: &Weight, b: &Weight) -> Rat {
        let mut acc = Rat::zero();
        for i in 0..self.rank() {
            for j in 0..self.rank() {
                acc += a.coords[i] * self.gram[i][j] * b.coords[j];
            }
        }
        acc
    }

    pub fn form_weight_root(&self, w: &Weight, r: &Root) -> Rat {
        let mut acc = Rat::zero();
        for i in 0..self.rank() {
            if w.coords[i].is_zero() {
                continue;
            }
            for j in 0..self.rank() {
                acc += w.coords[i] * self.gram[i][j] * rat(r.coords[j]);
            }
        }
        acc
    }

    pub fn root_square(&self, r: &Root) -> Rat {
        let w = Weight::from_root(r);
        self.form(&w, &w)
    }

    /// `<w, alpha^v> = 2 (w | alpha) / (alpha | alpha)`, exact.
    pub fn pairing(&self, w: &Weight, alpha: &Root) -> Rat {
        pairing_impl(&self.gram, w, alpha)
    }

    /// The coroot `2 alpha / (alpha | alpha)` expressed as a weight.
    pub fn coroot_weight(&self, alpha: &Root) -> Weight {
        let sq = self.root_square(alpha);
        Weight::from_root(alpha).scale(rat(2) / sq)
    }
}

fn pairing_impl(gram: &[Vec<Rat>], w: &Weight, alpha: &Root) -> Rat {
    let rank = gram.len();
    let mut dot = Rat::zero();
    let mut sq = Rat::zero();
    for i in 0..rank {
        for j in 0..rank {
            let g = gram[i][j];
            dot += w.coords[i] * g * rat(alpha.coords[j]);
            sq += rat(alpha.coords[i]) * g * rat(alpha.coords[j]);
        }
    }
    rat(2) * dot / sq
}

/// Dual partition of a weakly decreasing sequence (trailing zeros ignored).
fn dual_of_decreasing(parts: &[u64]) -> Vec<u64> {
    let width = parts.first().copied().unwrap_or(0);
    (1..=width)
        .map(|i| parts.iter().filter(|&&p| p >= i).count() as u64)
        .collect()
}

/// Cartan matrix in the convention `a[i][j] = <alpha_j, alpha_i^v>`, Bourbaki
/// numbering. Double and triple edges put `-2` resp. `-3` in the row of the
/// short root.
fn cartan_matrix(ct: CartanType) -> Vec<Vec<i64>> {
    let l = ct.rank();
    let mut a = vec![vec![0i64; l]; l];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let simple_edge = |a: &mut Vec<Vec<i64>>, i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match ct.family() {
        Family::A => {
            for i in 0..l - 1 {
                simple_edge(&mut a, i, i + 1);
            }
        }
        Family::B => {
            for i in 0..l.saturating_sub(2) {
                simple_edge(&mut a, i, i + 1);
            }
            // alpha_{l-1} long, alpha_l short
            a[l - 2][l - 1] = -1;
            a[l - 1][l - 2] = -2;
        }
        Family::C => {
            for i in 0..l.saturating_sub(2) {
                simple_edge(&mut a, i, i + 1);
            }
            // alpha_{l-1} short, alpha_l long
            a[l - 2][l - 1] = -2;
            a[l - 1][l - 2] = -1;
        }
        Family::D => {
            for i in 0..l - 2 {
                simple_edge(&mut a, i, i + 1);
            }
            simple_edge(&mut a, l - 3, l - 1);
        }
        Family::E => {
            // chain 1-3-4-5-6(-7)(-8), with 2 attached to 4
            let chain: &[usize] = match l {
                6 => &[1, 3, 4, 5, 6],
                7 => &[1, 3, 4, 5, 6, 7],
                8 => &[1, 3, 4, 5, 6, 7, 8],
                _ => unreachable!(),
            };
            for w in chain.windows(2) {
                simple_edge(&mut a, w[0] - 1, w[1] - 1);
            }
            simple_edge(&mut a, 2 - 1, 4 - 1);
        }
        Family::F => {
            simple_edge(&mut a, 0, 1);
            // alpha_2 long, alpha_3 short
            a[1][2] = -1;
            a[2][1] = -2;
            simple_edge(&mut a, 2, 3);
        }
        Family::G => {
            // alpha_1 short, alpha_2 long
            a[0][1] = -3;
            a[1][0] = -1;
        }
    }
    a
}

/// Symmetrizers `d_i = (alpha_i | alpha_i) / 2` with `(theta | theta) = 2`.
fn symmetrizers(ct: CartanType) -> Vec<Rat> {
    let l = ct.rank();
    let one = rat(1);
    let half = Rat::new(1, 2);
    match ct.family() {
        Family::A | Family::D | Family::E => vec![one; l],
        Family::B => {
            let mut d = vec![one; l];
            d[l - 1] = half;
            d
        }
        Family::C => {
            let mut d = vec![half; l];
            d[l - 1] = one;
            d
        }
        Family::F => vec![one, one, half, half],
        Family::G => vec![Rat::new(1, 3), one],
    }
}
