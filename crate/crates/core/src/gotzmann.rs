//! Torus-fixed points of `Hilb_k(P^2)` and their images in `Gr(n_k - k, R_k)`
//! under `I -> I ∩ R_k`, where `R_k` is the space of degree-`k` forms in
//! `X_0, X_1, X_2` and `n_k = C(k+2, 2)`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::algebra::{jordan_type, partitions_in_box, rat, Partition, RationalMatrix};
use crate::grassmann::{FixedSubspace, WeightSystem};
use crate::{Error, Result};
use itertools::Itertools;

/// Exponents `(a, b, c)` of `X_0^a X_1^b X_2^c`.
pub type Exponents = [u32; 3];

pub fn monomial_to_string(m: &Exponents) -> String {
    let factors: Vec<String> = [(2usize, m[2]), (1, m[1]), (0, m[0])]
        .into_iter()
        .filter(|&(_, e)| e > 0)
        .map(|(v, e)| {
            if e == 1 {
                format!("X_{v}")
            } else {
                format!("X_{v}^{e}")
            }
        })
        .collect();
    if factors.is_empty() {
        "1".to_string()
    } else {
        factors.join("*")
    }
}

/// Ordered basis of `R_k`: increasing lexicographic order for `X_0 > X_1 > X_2`,
/// i.e. `X_2^k, X_2^{k-1} X_1, ..., X_1^k, X_2^{k-1} X_0, ..., X_0^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialBasis {
    k: u32,
    monomials: Vec<Exponents>,
}

impl MonomialBasis {
    pub fn new(k: u32) -> Result<Self> {
        if k < 1 {
            return Err(Error::InvalidDegree(k));
        }
        let monomials = (0..=k)
            .flat_map(|a| (0..=k - a).map(move |b| [a, b, k - a - b]))
            .collect();
        Ok(MonomialBasis { k, monomials })
    }

    /// Degree-`k` monomials sorted by decreasing power of `X_2`, then of `X_1`:
    /// for `k = 2` this is `X_2^2, X_2 X_1, X_2 X_0, X_1^2, X_1 X_0, X_0^2`.
    pub fn x2_descending(k: u32) -> Result<Self> {
        let mut basis = Self::new(k)?;
        basis
            .monomials
            .sort_by(|x, y| y[2].cmp(&x[2]).then(y[1].cmp(&x[1])));
        Ok(basis)
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn monomials(&self) -> &[Exponents] {
        &self.monomials
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    /// 1-based position of a monomial.
    pub fn position(&self, m: &Exponents) -> Option<usize> {
        self.monomials.iter().position(|x| x == m).map(|i| i + 1)
    }
}

/// `lambda(t) X_i = t^{g^{lambda_i}} X_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusAction {
    k: u32,
    g: u32,
    exponents: [u32; 3],
    // g^{lambda_i}
    powers: [i64; 3],
}

impl TorusAction {
    /// Validates `g > 1`, positive exponents and the two inequalities
    /// (1) `g^l0 > a g^l1 + b g^l2` for all `a + b = k` and
    /// (2) `g^l1 > c g^l2` for all `0 <= c <= k`.
    /// Every violated condition is reported.
    pub fn new(k: u32, g: u32, exponents: [u32; 3]) -> Result<Self> {
        if k < 1 {
            return Err(Error::InvalidDegree(k));
        }
        if g < 2 || exponents.contains(&0) {
            return Err(Error::ConditionViolated {
                conditions: vec![],
                detail: format!("need g > 1 and positive exponents, got g={g}, {exponents:?}"),
            });
        }
        let pow = |e: u32| -> Result<i64> {
            i64::from(g)
                .checked_pow(e)
                .ok_or_else(|| Error::ConditionViolated {
                    conditions: vec![],
                    detail: format!("{g}^{e} overflows"),
                })
        };
        let powers = [pow(exponents[0])?, pow(exponents[1])?, pow(exponents[2])?];
        let kk = i64::from(k);
        let mut violated = Vec::new();
        let mut detail = Vec::new();

        // the extreme cases of (1) and (2) dominate all others
        let worst1 = (0..=kk)
            .map(|a| a * powers[1] + (kk - a) * powers[2])
            .max()
            .unwrap_or(0);
        if powers[0] <= worst1 {
            violated.push(1);
            detail.push(format!("(1) {} > {} fails", powers[0], worst1));
        }
        let worst2 = kk * powers[2];
        if powers[1] <= worst2 {
            violated.push(2);
            detail.push(format!("(2) {} > {} fails", powers[1], worst2));
        }
        if !violated.is_empty() {
            return Err(Error::ConditionViolated {
                conditions: violated,
                detail: detail.join("; "),
            });
        }
        let action = TorusAction {
            k,
            g,
            exponents,
            powers,
        };
        if !action.weights().iter().all_unique() {
            return Err(Error::InternalInvariantViolation(
                "torus weights on degree-k monomials are not distinct".into(),
            ));
        }
        Ok(action)
    }

    /// `g = k + 1`, exponents `(3, 2, 1)`.
    pub fn default_for(k: u32) -> Result<Self> {
        Self::new(k, k + 1, [3, 2, 1])
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn g(&self) -> u32 {
        self.g
    }

    pub fn exponents(&self) -> [u32; 3] {
        self.exponents
    }

    pub fn weight_of(&self, m: &Exponents) -> i64 {
        (0..3).map(|i| i64::from(m[i]) * self.powers[i]).sum()
    }

    /// Weights on [`MonomialBasis::new`]`(k)`, in basis order.
    pub fn weights(&self) -> Vec<i64> {
        MonomialBasis::new(self.k)
            .expect("k validated")
            .monomials()
            .iter()
            .map(|m| self.weight_of(m))
            .collect()
    }

    /// The ambient weight system on `R_k`. There is no commuting additive
    /// group here, so the exponent slot is set to 1.
    pub fn weight_system(&self) -> WeightSystem {
        WeightSystem::new(self.weights(), 1).expect("weights checked distinct")
    }
}

/// Three Young diagrams anchored at `[1:0:0]`, `[0:1:0]`, `[0:0:1]`: a
/// torus-fixed subscheme of length `|mu0| + |mu1| + |mu2|`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartitionTriple {
    pub parts: [Partition; 3],
}

impl PartitionTriple {
    pub fn new(mu0: Partition, mu1: Partition, mu2: Partition) -> Self {
        PartitionTriple {
            parts: [mu0, mu1, mu2],
        }
    }

    pub fn size(&self) -> usize {
        self.parts.iter().map(Partition::size).sum()
    }

    /// Whether the degree-`k` monomial lies in the saturated ideal: its
    /// dehomogenization at each coordinate point must avoid that point's
    /// diagram. Chart 0 uses `(b, c)`, chart 1 `(a, c)`, chart 2 `(a, b)`.
    pub fn contains_monomial(&self, m: &Exponents) -> bool {
        let [a, b, c] = *m;
        !self.parts[0].contains_cell(b, c)
            && !self.parts[1].contains_cell(a, c)
            && !self.parts[2].contains_cell(a, b)
    }
}

impl fmt::Display for PartitionTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};{};{}", self.parts[0], self.parts[1], self.parts[2])
    }
}

impl FromStr for PartitionTriple {
    type Err = Error;

    /// `mu0;mu1;mu2`, parts comma-separated, empty field = empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let fields: Vec<&str> = s.split(';').collect();
        if fields.len() != 3 {
            return Err(Error::Parse(format!(
                "expected three ';'-separated partitions, got {s:?}"
            )));
        }
        Ok(PartitionTriple::new(
            fields[0].parse()?,
            fields[1].parse()?,
            fields[2].parse()?,
        ))
    }
}

/// All partition triples of total size `k`, ordered by decreasing `|mu0|`,
/// then decreasing `|mu1|`, then partitions in descending lexicographic order.
pub fn enumerate_hilb_fixed_points(k: u32) -> Vec<PartitionTriple> {
    let k = k as usize;
    let all = |s: usize| partitions_in_box(s, s as u32, s);
    let mut out = Vec::new();
    for s0 in (0..=k).rev() {
        for s1 in (0..=k - s0).rev() {
            let s2 = k - s0 - s1;
            for ((a, b), c) in all(s0)
                .into_iter()
                .cartesian_product(all(s1))
                .cartesian_product(all(s2))
            {
                out.push(PartitionTriple::new(a, b, c));
            }
        }
    }
    out
}

/// `I ∩ R_k` as a coordinate subspace of `R_k` (1-based indices into
/// [`MonomialBasis::new`]`(k)`).
pub fn degree_k_part(t: &PartitionTriple, k: u32) -> Result<FixedSubspace> {
    if t.size() != k as usize {
        return Err(Error::SizeMismatch {
            expected: k as usize,
            found: t.size(),
        });
    }
    let basis = MonomialBasis::new(k)?;
    let indices: Vec<usize> = basis
        .monomials()
        .iter()
        .enumerate()
        .filter(|(_, m)| t.contains_monomial(m))
        .map(|(i, _)| i + 1)
        .collect();
    let expected = basis.len() - k as usize;
    if indices.len() != expected {
        return Err(Error::InternalInvariantViolation(format!(
            "I ∩ R_k for {t} has dimension {}, expected {expected}",
            indices.len()
        )));
    }
    FixedSubspace::new(indices, basis.len())
}

/// Images of every torus-fixed point of `Hilb_k(P^2)`, in enumeration order.
pub fn hilb_fixed_subspaces(k: u32) -> Result<Vec<FixedSubspace>> {
    enumerate_hilb_fixed_points(k)
        .iter()
        .map(|t| degree_k_part(t, k))
        .collect()
}

/// Matrix of `d/dz|_{z=0}` of `X_0 -> X_0 + z X_1 + z^2 X_2, X_1 -> X_1 + z X_2`
/// on the given ordered monomials: the derivation `X_0 -> X_1, X_1 -> X_2,
/// X_2 -> 0`. Column `j` holds the image of monomial `j`.
pub fn nilpotent_matrix(monomials: &[Exponents]) -> Result<RationalMatrix> {
    let index: HashMap<Exponents, usize> =
        monomials.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let n = monomials.len();
    let mut out = RationalMatrix::zeros(n, n);
    for (col, &[a, b, c]) in monomials.iter().enumerate() {
        let images = [
            (b, [a, b.wrapping_sub(1), c + 1]),
            (a, [a.wrapping_sub(1), b + 1, c]),
        ];
        for (mult, target) in images {
            if mult == 0 {
                continue;
            }
            let row = *index
                .get(&target)
                .ok_or_else(|| Error::IncompleteBasis(monomial_to_string(&target)))?;
            let cur = out.get(row, col).clone();
            out.set(row, col, cur + rat(i64::from(mult)));
        }
    }
    Ok(out)
}

pub fn nilpotent_matrix_on_rk(basis: &MonomialBasis) -> RationalMatrix {
    nilpotent_matrix(basis.monomials()).expect("a full monomial basis is closed")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JordanCheck {
    pub jordan_type: Partition,
    pub regular: bool,
}

/// Jordan type of the additive-group vector field on `R_k`; regular iff a
/// single block.
pub fn jordan_regularity_check(k: u32) -> Result<JordanCheck> {
    let m = nilpotent_matrix_on_rk(&MonomialBasis::new(k)?);
    let jordan_type = jordan_type(&m)?;
    let regular = jordan_type.len() == 1;
    Ok(JordanCheck {
        jordan_type,
        regular,
    })
}
