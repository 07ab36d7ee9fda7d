//! Integer partitions and the partition classification of classical nilpotent
//! orbits, together with the centralizer and orbit dimension formulas.

use std::fmt;

use crate::rootsys::{CartanType, Family};
use crate::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition(format!(
                "zero part in {:?}",
                parts
            )));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts not weakly decreasing: {:?}",
                parts
            )));
        }
        Ok(Partition { parts })
    }

    /// Sort descending and drop zeros, then validate. Used by the sub-case
    /// engine where boundary values can merge runs or vanish.
    pub fn normalized(mut parts: Vec<u64>) -> Result<Self> {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn sum(&self) -> u64 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Transpose of the Young diagram.
    pub fn dual(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|i| self.parts.iter().filter(|&&p| p >= i).count() as u64)
            .collect();
        Partition { parts }
    }

    /// All parts even. Such a partition labels two distinct orbits in so_n.
    pub fn is_very_even(&self) -> bool {
        !self.parts.is_empty() && self.parts.iter().all(|&p| p % 2 == 0)
    }

    fn count_odd_parts(&self) -> u64 {
        self.parts.iter().filter(|&&p| p % 2 == 1).count() as u64
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, ")")
    }
}

/// All partitions of `n`, largest part first, in lexicographically
/// decreasing order.
pub fn partitions_of(n: u64) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current: Vec<u64> = Vec::new();
    descend(n, n, &mut current, &mut out);
    out
}

fn descend(remaining: u64, max_part: u64, current: &mut Vec<u64>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    let top = remaining.min(max_part);
    for p in (1..=top).rev() {
        current.push(p);
        descend(remaining - p, p, current, out);
        current.pop();
    }
}

/// One of the classical matrix algebras sl_n, so_n, sp_n.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassicalFamily {
    Sl(u64),
    So(u64),
    Sp(u64),
}

impl ClassicalFamily {
    pub fn new_sl(n: u64) -> Result<Self> {
        if n >= 2 {
            Ok(ClassicalFamily::Sl(n))
        } else {
            Err(Error::Unsupported(format!("sl_{} is not simple", n)))
        }
    }

    pub fn new_so(n: u64) -> Result<Self> {
        if n >= 5 {
            Ok(ClassicalFamily::So(n))
        } else {
            Err(Error::Unsupported(format!(
                "so_{} is outside the supported range",
                n
            )))
        }
    }

    pub fn new_sp(n: u64) -> Result<Self> {
        if n >= 2 && n % 2 == 0 {
            Ok(ClassicalFamily::Sp(n))
        } else {
            Err(Error::Unsupported(format!("sp_{} requires even n >= 2", n)))
        }
    }

    pub fn n(&self) -> u64 {
        match *self {
            ClassicalFamily::Sl(n) | ClassicalFamily::So(n) | ClassicalFamily::Sp(n) => n,
        }
    }

    pub fn dim_g(&self) -> i64 {
        let n = self.n() as i64;
        match self {
            ClassicalFamily::Sl(_) => n * n - 1,
            ClassicalFamily::So(_) => n * (n - 1) / 2,
            ClassicalFamily::Sp(_) => n * (n + 1) / 2,
        }
    }

    pub fn rank(&self) -> u64 {
        let n = self.n();
        match self {
            ClassicalFamily::Sl(_) => n - 1,
            ClassicalFamily::So(_) => n / 2,
            ClassicalFamily::Sp(_) => n / 2,
        }
    }

    pub fn dim_nilpotent_cone(&self) -> i64 {
        self.dim_g() - self.rank() as i64
    }

    pub fn lacing(&self) -> u64 {
        match self {
            ClassicalFamily::Sl(_) => 1,
            ClassicalFamily::So(n) => {
                if n % 2 == 1 {
                    2
                } else {
                    1
                }
            }
            ClassicalFamily::Sp(_) => 2,
        }
    }

    pub fn coxeter_number(&self) -> u64 {
        let n = self.n();
        match self {
            ClassicalFamily::Sl(_) => n,
            ClassicalFamily::So(_) => {
                if n % 2 == 1 {
                    n - 1
                } else {
                    n - 2
                }
            }
            ClassicalFamily::Sp(_) => n,
        }
    }

    pub fn dual_coxeter_number(&self) -> u64 {
        let n = self.n();
        match self {
            ClassicalFamily::Sl(_) => n,
            ClassicalFamily::So(_) => n - 2,
            ClassicalFamily::Sp(_) => n / 2 + 1,
        }
    }

    pub fn langlands_dual(&self) -> ClassicalFamily {
        match *self {
            ClassicalFamily::Sl(n) => ClassicalFamily::Sl(n),
            ClassicalFamily::So(n) => {
                if n % 2 == 1 {
                    ClassicalFamily::Sp(n - 1)
                } else {
                    ClassicalFamily::So(n)
                }
            }
            ClassicalFamily::Sp(n) => ClassicalFamily::So(n + 1),
        }
    }

    /// The Cartan type of the root system, when the rank bounds admit one.
    /// so_6 (D3) and sp_2 (C1) fall outside those bounds.
    pub fn cartan_type(&self) -> Option<CartanType> {
        let n = self.n() as usize;
        match self {
            ClassicalFamily::Sl(_) => CartanType::new(Family::A, n - 1).ok(),
            ClassicalFamily::So(_) => {
                if n % 2 == 1 {
                    CartanType::new(Family::B, (n - 1) / 2).ok()
                } else {
                    CartanType::new(Family::D, n / 2).ok()
                }
            }
            ClassicalFamily::Sp(_) => CartanType::new(Family::C, n / 2).ok(),
        }
    }

    /// Inverse of `cartan_type` for the classical families.
    pub fn from_cartan_type(ct: CartanType) -> Option<ClassicalFamily> {
        let l = ct.rank() as u64;
        match ct.family() {
            Family::A => Some(ClassicalFamily::Sl(l + 1)),
            Family::B => Some(ClassicalFamily::So(2 * l + 1)),
            Family::C => Some(ClassicalFamily::Sp(2 * l)),
            Family::D => Some(ClassicalFamily::So(2 * l)),
            _ => None,
        }
    }

    /// Membership in P(n), P_1(n) or P_{-1}(n): so_n requires even parts to
    /// have even multiplicity, sp_n requires the same of odd parts.
    pub fn admits(&self, p: &Partition) -> bool {
        if p.sum() != self.n() {
            return false;
        }
        match self {
            ClassicalFamily::Sl(_) => true,
            ClassicalFamily::So(_) => parity_multiplicities_even(p, 0),
            ClassicalFamily::Sp(_) => parity_multiplicities_even(p, 1),
        }
    }

    /// Partition of the regular nilpotent orbit.
    pub fn regular_partition(&self) -> Partition {
        let n = self.n();
        match self {
            ClassicalFamily::So(_) if n % 2 == 0 => Partition {
                parts: vec![n - 1, 1],
            },
            _ => Partition { parts: vec![n] },
        }
    }
}

impl fmt::Display for ClassicalFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassicalFamily::Sl(n) => write!(f, "sl{}", n),
            ClassicalFamily::So(n) => write!(f, "so{}", n),
            ClassicalFamily::Sp(n) => write!(f, "sp{}", n),
        }
    }
}

fn parity_multiplicities_even(p: &Partition, parity: u64) -> bool {
    let mut i = 0;
    let parts = p.parts();
    while i < parts.len() {
        let mut j = i;
        while j < parts.len() && parts[j] == parts[i] {
            j += 1;
        }
        if parts[i] % 2 == parity && (j - i) % 2 == 1 {
            return false;
        }
        i = j;
    }
    true
}

/// A nilpotent orbit of a classical algebra, labelled by its partition.
/// Very even partitions are rejected: they label two orbits and never occur
/// among the orbits this crate computes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassicalOrbit {
    family: ClassicalFamily,
    partition: Partition,
}

impl ClassicalOrbit {
    pub fn new(family: ClassicalFamily, partition: Partition) -> Result<Self> {
        if partition.sum() != family.n() {
            return Err(Error::SizeMismatch {
                got: partition.sum(),
                want: family.n(),
            });
        }
        if !family.admits(&partition) {
            return Err(Error::InvalidPartition(format!(
                "{} is not a nilpotent orbit partition for {}",
                partition, family
            )));
        }
        if matches!(family, ClassicalFamily::So(_)) && partition.is_very_even() {
            return Err(Error::VeryEven(partition.to_string()));
        }
        Ok(ClassicalOrbit { family, partition })
    }

    pub fn family(&self) -> ClassicalFamily {
        self.family
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    /// dim g^f for f in this orbit, from the dual-partition formulas.
    pub fn centralizer_dim(&self) -> i64 {
        centralizer_dim_raw(self.family, &self.partition)
    }

    /// dim G.f = dim g - dim g^f.
    pub fn orbit_dim(&self) -> i64 {
        self.family.dim_g() - self.centralizer_dim()
    }
}

impl fmt::Display for ClassicalOrbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.partition)
    }
}

/// Centralizer dimension of a nilpotent with Jordan type `p`, without the
/// very-even gate. The oracle enumerates over very even candidates too, and
/// both orbits of a very even partition share this dimension.
pub fn centralizer_dim_raw(family: ClassicalFamily, p: &Partition) -> i64 {
    let mu = p.dual();
    let sq: i64 = mu.parts().iter().map(|&m| (m * m) as i64).sum();
    let odd = p.count_odd_parts() as i64;
    match family {
        ClassicalFamily::Sl(_) => sq - 1,
        ClassicalFamily::So(_) => {
            assert_eq!((sq - odd) % 2, 0);
            (sq - odd) / 2
        }
        ClassicalFamily::Sp(_) => {
            assert_eq!((sq + odd) % 2, 0);
            (sq + odd) / 2
        }
    }
}

/// Orbit dimension for a Jordan type, very even included (see above).
pub fn orbit_dim_raw(family: ClassicalFamily, p: &Partition) -> i64 {
    family.dim_g() - centralizer_dim_raw(family, p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn part(v: &[u64]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn dual_examples() {
        assert_eq!(part(&[3, 1]).dual(), part(&[2, 1, 1]));
        assert_eq!(part(&[3, 3, 1]).dual(), part(&[3, 2, 2]));
        assert_eq!(part(&[1, 1, 1, 1]).dual(), part(&[4]));
        assert_eq!(part(&[4]).dual(), part(&[1, 1, 1, 1]));
    }

    #[test]
    fn rejects_bad_partitions() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!(Partition::new(vec![]).is_ok());
    }

    #[test]
    fn membership_examples() {
        let so7 = ClassicalFamily::new_so(7).unwrap();
        assert!(so7.admits(&part(&[3, 3, 1])));
        let so8 = ClassicalFamily::new_so(8).unwrap();
        assert!(!so8.admits(&part(&[4, 3, 1])));
        let sp6 = ClassicalFamily::new_sp(6).unwrap();
        assert!(sp6.admits(&part(&[3, 3])));
        assert!(!sp6.admits(&part(&[3, 2, 1])));
        // size mismatch simply fails membership
        assert!(!so7.admits(&part(&[3, 3])));
    }

    #[test]
    fn very_even_rejected_for_so() {
        let so8 = ClassicalFamily::new_so(8).unwrap();
        assert!(so8.admits(&part(&[4, 4])));
        let err = ClassicalOrbit::new(so8, part(&[4, 4])).unwrap_err();
        assert!(matches!(err, Error::VeryEven(_)));
        // not very even: fine
        ClassicalOrbit::new(so8, part(&[3, 3, 1, 1])).unwrap();
    }

    #[test]
    fn centralizer_examples() {
        let sl4 = ClassicalFamily::new_sl(4).unwrap();
        let o = ClassicalOrbit::new(sl4, part(&[2, 2])).unwrap();
        assert_eq!(o.centralizer_dim(), 7);

        let so7 = ClassicalFamily::new_so(7).unwrap();
        let o = ClassicalOrbit::new(so7, part(&[3, 3, 1])).unwrap();
        assert_eq!(o.centralizer_dim(), 7);

        // zero orbit of sl_n has centralizer all of g
        for n in 2..=6 {
            let sl = ClassicalFamily::new_sl(n).unwrap();
            let ones = Partition::new(vec![1; n as usize]).unwrap();
            let o = ClassicalOrbit::new(sl, ones).unwrap();
            assert_eq!(o.centralizer_dim(), sl.dim_g());
            assert_eq!(o.orbit_dim(), 0);
        }
    }

    #[test]
    fn orbit_dim_examples() {
        let sl2 = ClassicalFamily::new_sl(2).unwrap();
        assert_eq!(
            ClassicalOrbit::new(sl2, part(&[2])).unwrap().orbit_dim(),
            2
        );
        let sp4 = ClassicalFamily::new_sp(4).unwrap();
        // (2,2) is the subregular orbit of sp_4: centralizer 4, orbit 6.
        let o = ClassicalOrbit::new(sp4, part(&[2, 2])).unwrap();
        assert_eq!(o.centralizer_dim(), 4);
        assert_eq!(o.orbit_dim(), 6);
        // (2,1,1) is the minimal orbit: centralizer 6, orbit 4.
        let o = ClassicalOrbit::new(sp4, part(&[2, 1, 1])).unwrap();
        assert_eq!(o.centralizer_dim(), 6);
        assert_eq!(o.orbit_dim(), 4);
        let so8 = ClassicalFamily::new_so(8).unwrap();
        let o = ClassicalOrbit::new(so8, Partition::new(vec![1; 8]).unwrap()).unwrap();
        assert_eq!(o.orbit_dim(), 0);
    }

    #[test]
    fn orbit_dims_even_and_bounded() {
        for n in 2..=8u64 {
            for fam in [
                ClassicalFamily::new_sl(n).ok(),
                ClassicalFamily::new_so(n).ok(),
                ClassicalFamily::new_sp(n).ok(),
            ]
            .into_iter()
            .flatten()
            {
                for p in partitions_of(n) {
                    if !fam.admits(&p) {
                        continue;
                    }
                    let d = orbit_dim_raw(fam, &p);
                    assert_eq!(d % 2, 0, "{} {}", fam, p);
                    assert!(d >= 0 && d <= fam.dim_nilpotent_cone());
                    assert!(centralizer_dim_raw(fam, &p) >= fam.rank() as i64);
                }
            }
        }
    }

    #[test]
    fn centralizer_minimal_iff_regular() {
        for fam in [
            ClassicalFamily::new_sl(6).unwrap(),
            ClassicalFamily::new_so(7).unwrap(),
            ClassicalFamily::new_so(8).unwrap(),
            ClassicalFamily::new_sp(6).unwrap(),
        ] {
            let reg = fam.regular_partition();
            assert!(fam.admits(&reg));
            assert_eq!(centralizer_dim_raw(fam, &reg), fam.rank() as i64);
            for p in partitions_of(fam.n()) {
                if fam.admits(&p) && p != reg {
                    assert!(centralizer_dim_raw(fam, &p) > fam.rank() as i64);
                }
            }
        }
    }

    #[test]
    fn family_constructors_validate() {
        assert!(ClassicalFamily::new_sp(5).is_err());
        assert!(ClassicalFamily::new_so(4).is_err());
        assert!(ClassicalFamily::new_sl(1).is_err());
        assert!(ClassicalFamily::new_sp(2).is_ok());
    }

    #[test]
    fn partitions_of_small() {
        assert_eq!(partitions_of(4).len(), 5);
        assert_eq!(partitions_of(0).len(), 1);
        assert_eq!(partitions_of(10).len(), 42);
    }

    #[test]
    fn langlands_dual_families() {
        assert_eq!(
            ClassicalFamily::new_so(7).unwrap().langlands_dual(),
            ClassicalFamily::new_sp(6).unwrap()
        );
        assert_eq!(
            ClassicalFamily::new_sp(6).unwrap().langlands_dual(),
            ClassicalFamily::new_so(7).unwrap()
        );
        assert_eq!(
            ClassicalFamily::new_so(8).unwrap().langlands_dual(),
            ClassicalFamily::new_so(8).unwrap()
        );
    }

    fn arb_partition() -> impl Strategy<Value = Partition> {
        proptest::collection::vec(1u64..12, 0..10).prop_map(|mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            Partition::new(v).unwrap()
        })
    }

    proptest! {
        #[test]
        fn dual_is_involutive(p in arb_partition()) {
            prop_assert_eq!(p.dual().dual(), p);
        }

        #[test]
        fn dual_identities(p in arb_partition()) {
            let mu = p.dual();
            // transposing preserves the total and swaps width for length
            prop_assert_eq!(mu.sum(), p.sum());
            prop_assert_eq!(mu.len() as u64, p.parts().first().copied().unwrap_or(0));
            // sum mu_i^2 = sum (2i - 1) lambda_i
            let lhs: u64 = mu.parts().iter().map(|&m| m * m).sum();
            let rhs: u64 = p
                .parts()
                .iter()
                .enumerate()
                .map(|(i, &l)| (2 * i as u64 + 1) * l)
                .sum();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
