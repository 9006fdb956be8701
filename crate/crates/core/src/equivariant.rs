//! `C^*`-equivariant classes represented by their restrictions to the fixed
//! points. Each restriction is a Laurent polynomial in the equivariant
//! parameter `v`; `v` is only ever inverted inside rank computations.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;

use num_traits::{One, Zero};

use crate::algebra::{Partition, Rational, RowSpace};
use crate::filtration::{box_for, schur_at};
use crate::grassmann::{FixedSubspace, GradedPresentation, WeightSystem, V_NAME};
use crate::{Error, Result};

/// Finite Laurent polynomial `sum_e c_e v^e`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i32, Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Rational::one(), 0)
    }

    pub fn monomial(c: Rational, exp: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        LaurentPoly { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i32, Rational)>) -> Self {
        let mut out = Self::zero();
        for (e, c) in terms {
            out.add_term(e, c);
        }
        out
    }

    fn add_term(&mut self, e: i32, c: Rational) {
        let slot = self.terms.entry(e).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &Rational)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, e: i32) -> Rational {
        self.terms.get(&e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// No negative powers of `v`.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|&e| e >= 0)
    }

    /// Value at `v = value`; `None` when `value` is zero and a negative power occurs.
    pub fn eval(&self, value: &Rational) -> Option<Rational> {
        if value.is_zero() && !self.is_polynomial() {
            return None;
        }
        let mut acc = Rational::zero();
        for (&e, c) in &self.terms {
            let power = num_traits::pow::pow(value.clone(), e.unsigned_abs() as usize);
            acc += c * if e < 0 { power.recip() } else { power };
        }
        Some(acc)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| match e {
                0 => c.to_string(),
                1 => format!("{c}*v"),
                _ => format!("{c}*v^{e}"),
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// A class given by its restriction to each point of `support`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivariantClass {
    support: Vec<FixedSubspace>,
    values: Vec<LaurentPoly>,
}

impl EquivariantClass {
    pub fn new(support: Vec<FixedSubspace>, values: Vec<LaurentPoly>) -> Self {
        assert_eq!(support.len(), values.len(), "one value per fixed point");
        EquivariantClass { support, values }
    }

    pub fn constant_one(support: Vec<FixedSubspace>) -> Self {
        let values = vec![LaurentPoly::one(); support.len()];
        Self::new(support, values)
    }

    pub fn support(&self) -> &[FixedSubspace] {
        &self.support
    }

    pub fn values(&self) -> &[LaurentPoly] {
        &self.values
    }

    pub fn value_at(&self, point: &FixedSubspace) -> Option<&LaurentPoly> {
        self.support
            .iter()
            .position(|p| p == point)
            .map(|i| &self.values[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = (&FixedSubspace, &LaurentPoly)> {
        self.support.iter().zip(&self.values)
    }

    pub fn is_polynomial(&self) -> bool {
        self.values.iter().all(LaurentPoly::is_polynomial)
    }

    /// Pointwise product over the common support, in `self`'s order.
    pub fn product(&self, other: &EquivariantClass) -> EquivariantClass {
        let (support, values) = self
            .iter()
            .filter_map(|(p, x)| other.value_at(p).map(|y| (p.clone(), x * y)))
            .unzip();
        EquivariantClass { support, values }
    }

    /// Coordinate projection onto `sub`, in `sub`'s order.
    pub fn restrict(&self, sub: &[FixedSubspace]) -> Result<EquivariantClass> {
        let values = sub
            .iter()
            .map(|p| {
                self.value_at(p)
                    .cloned()
                    .ok_or_else(|| Error::UnknownFixedPoint(p.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(EquivariantClass {
            support: sub.to_vec(),
            values,
        })
    }

    /// Numeric values at `v = value`.
    pub fn specialize(&self, value: &Rational) -> Option<Vec<Rational>> {
        self.values.iter().map(|x| x.eval(value)).collect()
    }
}

/// Restriction of the equivariant Schur class: `s_mu(a_I) v^{|mu|}` at `W_I`.
pub fn eq_schur_class(
    mu: &Partition,
    points: &[FixedSubspace],
    ws: &WeightSystem,
) -> Result<EquivariantClass> {
    box_for(points, ws)?.check(mu)?;
    let values = points
        .iter()
        .map(|pt| LaurentPoly::monomial(schur_at(mu, pt, ws), mu.size() as i32))
        .collect();
    Ok(EquivariantClass::new(points.to_vec(), values))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LocalizationRank {
    pub rank: usize,
    pub fixed_points: usize,
    pub full: bool,
}

/// Rank over `Q(v)` of the restrictions of all equivariant Schur classes in
/// the box. Row `mu` is a rational row times the unit `v^{|mu|}`, so the rank
/// is that of the rows specialized at `v = 1`.
pub fn localization_rank_check(
    points: &[FixedSubspace],
    ws: &WeightSystem,
) -> Result<LocalizationRank> {
    let bx = box_for(points, ws)?;
    let mut space = RowSpace::new(points.len());
    let one = Rational::one();
    'outer: for p in 0..=bx.area() {
        for mu in bx.partitions_of(p) {
            let class = eq_schur_class(&mu, points, ws)?;
            let row = class
                .specialize(&one)
                .expect("Schur classes are polynomial in v");
            space.insert(&row);
            if space.is_full() {
                break 'outer;
            }
        }
    }
    Ok(LocalizationRank {
        rank: space.rank(),
        fixed_points: points.len(),
        full: space.rank() == points.len(),
    })
}

/// Substitutes `v = value` in every relation and drops `v` from the variables.
pub fn specialize_v(pres: &GradedPresentation, value: &Rational) -> Result<GradedPresentation> {
    if !pres.variables.iter().any(|(name, _)| name == V_NAME) {
        return Err(Error::MissingVariable(V_NAME.to_string()));
    }
    let variables = pres
        .variables
        .iter()
        .filter(|(n, _)| n != V_NAME)
        .cloned()
        .collect();
    let relations = pres
        .relations
        .iter()
        .map(|r| r.substitute(V_NAME, value))
        .collect::<Result<Vec<_>>>()?;
    Ok(GradedPresentation {
        variables,
        relations,
    })
}
