//! Fixed points, cells, Poincaré polynomials and the vector-field
//! presentations of the cohomology of `Gr(n-k, V)`, `dim V = n`.
//!
//! Degrees are halved throughout: cohomological degree `2m` is stored as `m`,
//! so Poincaré polynomials are polynomials in `q = t^2`.

use std::fmt;
use std::sync::Arc;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::{
    rat, IntegerPolynomial, Monomial, MultiPoly, Rational, RationalMatrix, RowSpace,
};
use crate::{Error, Result};

/// Distinct integer torus weights on an ordered basis `e_1..e_n`, plus the
/// exponent `p` in `lambda(t) phi(z) lambda(t)^{-1} = phi(t^p z)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSystem {
    weights: Vec<i64>,
    p: u32,
}

impl WeightSystem {
    pub fn new(weights: Vec<i64>, p: u32) -> Result<Self> {
        if p == 0 {
            return Err(Error::InvalidExponent);
        }
        if !weights.iter().all_unique() {
            return Err(Error::DuplicateWeights);
        }
        Ok(WeightSystem { weights, p })
    }

    /// Weights `1, 2, ..., n` with `p = 2`.
    pub fn standard(n: usize) -> Self {
        WeightSystem {
            weights: (1..=n as i64).collect(),
            p: 2,
        }
    }

    pub fn n(&self) -> usize {
        self.weights.len()
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    /// Weight of `e_i`, 1-based.
    pub fn weight(&self, i: usize) -> i64 {
        self.weights[i - 1]
    }

    /// The affine reparametrization `a_i -> alpha * a_i + beta`.
    pub fn affine(&self, alpha: i64, beta: i64) -> Result<Self> {
        Self::new(
            self.weights.iter().map(|a| alpha * a + beta).collect(),
            self.p,
        )
    }
}

/// Coordinate subspace `W_I = span{e_i : i in I}`, `I` 1-based and strictly
/// increasing.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FixedSubspace {
    indices: Vec<usize>,
}

impl FixedSubspace {
    pub fn new(indices: Vec<usize>, n: usize) -> Result<Self> {
        let increasing = indices.windows(2).all(|w| w[0] < w[1]);
        let in_range = indices.iter().all(|&i| (1..=n).contains(&i));
        if !increasing || !in_range {
            return Err(Error::InvalidSubspace { indices, n });
        }
        Ok(FixedSubspace { indices })
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn dim(&self) -> usize {
        self.indices.len()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.binary_search(&i).is_ok()
    }

    /// Weights of the spanning basis vectors, as rationals.
    pub fn weights_in(&self, ws: &WeightSystem) -> Vec<Rational> {
        self.indices.iter().map(|&i| rat(ws.weight(i))).collect()
    }

    /// Tangent weights `a_j - a_i` on `Hom(W_I, V/W_I)`, for `i in I`, `j not in I`.
    pub fn tangent_weights(&self, ws: &WeightSystem) -> Vec<i64> {
        let outside: Vec<usize> = (1..=ws.n()).filter(|j| !self.contains(*j)).collect();
        self.indices
            .iter()
            .flat_map(|&i| outside.iter().map(move |&j| ws.weight(j) - ws.weight(i)))
            .collect()
    }
}

impl fmt::Display for FixedSubspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.indices.iter().join(","))
    }
}

/// All `(n-k)`-element coordinate subspaces of an `n`-dimensional space, in
/// lexicographic order of index sets.
pub fn enumerate_fixed_subspaces(n: usize, k: usize) -> Result<Vec<FixedSubspace>> {
    if k > n {
        return Err(Error::InvalidDimensions { n, k });
    }
    Ok((1..=n)
        .combinations(n - k)
        .map(|indices| FixedSubspace { indices })
        .collect())
}

fn check_subspace(sub: &FixedSubspace, ws: &WeightSystem) {
    assert!(
        sub.indices.last().is_none_or(|&i| i <= ws.n()),
        "subspace {sub} does not fit a weight system of size {}",
        ws.n()
    );
}

/// Number of negative tangent weights at `W_I`.
pub fn minus_cell_dimension(sub: &FixedSubspace, ws: &WeightSystem) -> usize {
    check_subspace(sub, ws);
    sub.tangent_weights(ws)
        .into_iter()
        .filter(|&w| w < 0)
        .count()
}

/// Number of positive tangent weights at `W_I`.
pub fn plus_cell_dimension(sub: &FixedSubspace, ws: &WeightSystem) -> usize {
    check_subspace(sub, ws);
    sub.tangent_weights(ws)
        .into_iter()
        .filter(|&w| w > 0)
        .count()
}

/// `sum_I q^{dim C_I^-}` over all fixed points of `Gr(n-k, V)`.
pub fn poincare_from_cells(ws: &WeightSystem, k: usize) -> Result<IntegerPolynomial> {
    let points = enumerate_fixed_subspaces(ws.n(), k)?;
    let mut coeffs = vec![BigInt::zero(); k * (ws.n() - k) + 1];
    for sub in &points {
        coeffs[minus_cell_dimension(sub, ws)] += 1;
    }
    Ok(IntegerPolynomial::new(coeffs))
}

/// `prod_i (1 - q^{d_i + s}) / (1 - q^{d_i})`, expanded exactly.
pub fn poincare_from_regular_sequence(degrees: &[u32], shift: u32) -> Result<IntegerPolynomial> {
    if degrees.contains(&0) {
        return Err(Error::InvalidDegree(0));
    }
    let num = degrees.iter().fold(IntegerPolynomial::one(), |acc, &d| {
        &acc * &IntegerPolynomial::one_minus_power((d + shift) as usize)
    });
    let den = degrees.iter().fold(IntegerPolynomial::one(), |acc, &d| {
        &acc * &IntegerPolynomial::one_minus_power(d as usize)
    });
    num.div_exact(&den).ok_or(Error::NotPolynomial)
}

fn check_index(i: usize, j: usize, n: usize, k: usize) -> Result<()> {
    if k > n || !(1..=n - k).contains(&i) || !(1..=k).contains(&j) {
        return Err(Error::IndexOutOfRange { i, j, n, k });
    }
    Ok(())
}

fn check_dims(n: usize, k: usize) -> Result<()> {
    if k == 0 || k >= n {
        return Err(Error::InvalidDimensions { n, k });
    }
    Ok(())
}

/// Halved degree `(n-k) + j - i` of the coordinate `w_{i,j}`.
pub fn w_degree(i: usize, j: usize, n: usize, k: usize) -> Result<u32> {
    check_index(i, j, n, k)?;
    Ok((n - k + j - i) as u32)
}

pub fn w_name(i: usize, j: usize) -> String {
    format!("w_{i}_{j}")
}

/// Coordinates `w_{i,j}` in row-major order with their halved degrees.
fn w_variables(n: usize, k: usize) -> Vec<(String, u32)> {
    (1..=n - k)
        .cartesian_product(1..=k)
        .map(|(i, j)| (w_name(i, j), (n - k + j - i) as u32))
        .collect()
}

fn w_index(i: usize, j: usize, k: usize) -> usize {
    (i - 1) * k + (j - 1)
}

// c_{L1,L2}: 0 when the two sides agree, 1 otherwise
fn c_flag(l1: usize, l2: usize) -> i64 {
    i64::from(l1 != l2)
}

/// `N_a(w_{i,j}) = -c_{1,i} w_{i-1,j} - w_{i,1} w_{n-k,j} + c_{k+1,j+1} w_{i,j+1}`
/// over the given variable list (which must start with the `w`'s in row-major order).
fn relation_over(vars: &Arc<[String]>, i: usize, j: usize, n: usize, k: usize) -> MultiPoly {
    let w = |a: usize, b: usize| MultiPoly::var(vars.clone(), w_index(a, b, k));
    let mut r = MultiPoly::zero(vars.clone());
    if c_flag(1, i) == 1 {
        r = &r - &w(i - 1, j);
    }
    r = &r - &(&w(i, 1) * &w(n - k, j));
    if c_flag(k + 1, j + 1) == 1 {
        r = &r + &w(i, j + 1);
    }
    r
}

/// The vector-field relation attached to `w_{i,j}` in `C[w]`.
pub fn relation_generator(i: usize, j: usize, n: usize, k: usize) -> Result<MultiPoly> {
    check_index(i, j, n, k)?;
    let vars: Arc<[String]> = w_variables(n, k).into_iter().map(|(v, _)| v).collect();
    Ok(relation_over(&vars, i, j, n, k))
}

/// Graded variables and homogeneous relations of a quotient ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedPresentation {
    pub variables: Vec<(String, u32)>,
    pub relations: Vec<MultiPoly>,
}

impl GradedPresentation {
    pub fn degrees(&self) -> Vec<u32> {
        self.variables.iter().map(|(_, d)| *d).collect()
    }

    pub fn variable_names(&self) -> Vec<&str> {
        self.variables.iter().map(|(v, _)| v.as_str()).collect()
    }

    pub fn is_homogeneous(&self) -> bool {
        let deg = self.degrees();
        self.relations.iter().all(|r| r.is_homogeneous(&deg))
    }

    /// Weighted degree of each relation; `None` for inhomogeneous or zero ones.
    pub fn relation_degrees(&self) -> Vec<Option<u32>> {
        let deg = self.degrees();
        self.relations
            .iter()
            .map(|r| r.homogeneous_degree(&deg))
            .collect()
    }
}

/// `H^*(Gr(n-k, V)) = C[w_{i,j}] / (N_a(w_{i,j}))`.
pub fn ordinary_presentation(n: usize, k: usize) -> Result<GradedPresentation> {
    check_dims(n, k)?;
    let variables = w_variables(n, k);
    let names: Arc<[String]> = variables.iter().map(|(v, _)| v.clone()).collect();
    let relations = (1..=n - k)
        .cartesian_product(1..=k)
        .map(|(i, j)| relation_over(&names, i, j, n, k))
        .collect();
    Ok(GradedPresentation {
        variables,
        relations,
    })
}

pub const V_NAME: &str = "v";

/// `H^*_{G_m}(Gr(n-k, V)) = C[w_{i,j}, v] / I_v`, generated by
/// `(2(n-k) - 2(i-j)) v w_{i,j} - 2 N_a(w_{i,j})`.
pub fn equivariant_presentation(n: usize, k: usize) -> Result<GradedPresentation> {
    check_dims(n, k)?;
    let mut variables = w_variables(n, k);
    variables.push((V_NAME.to_string(), 1));
    let names: Arc<[String]> = variables.iter().map(|(v, _)| v.clone()).collect();
    let v = MultiPoly::var(names.clone(), names.len() - 1);
    let relations = (1..=n - k)
        .cartesian_product(1..=k)
        .map(|(i, j)| {
            let weight = 2 * (n - k) as i64 - 2 * (i as i64 - j as i64);
            let w = MultiPoly::var(names.clone(), w_index(i, j, k));
            let linear = (&v * &w).scale(&rat(weight));
            &linear - &relation_over(&names, i, j, n, k).scale(&rat(2))
        })
        .collect();
    Ok(GradedPresentation {
        variables,
        relations,
    })
}

/// Exponent vectors of weighted degree exactly `d`.
pub fn monomials_of_degree(degrees: &[u32], d: u32) -> Vec<Monomial> {
    fn rec(degrees: &[u32], idx: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if idx == degrees.len() {
            if left == 0 {
                out.push(Monomial(cur.clone()));
            }
            return;
        }
        let step = degrees[idx];
        for e in 0..=left / step {
            cur.push(e);
            rec(degrees, idx + 1, left - e * step, cur, out);
            cur.pop();
        }
    }
    assert!(
        degrees.iter().all(|&d| d > 0),
        "variable degrees must be positive"
    );
    let mut out = Vec::new();
    rec(degrees, 0, d, &mut Vec::new(), &mut out);
    out
}

/// Dimension of the degree-`d` piece of the quotient ring: the number of
/// degree-`d` monomials minus the rank of `{m * r}` for every relation `r` of
/// degree `e <= d` and monomial `m` of degree `d - e`.
pub fn graded_dimension(pres: &GradedPresentation, d: u32) -> Result<usize> {
    let degrees = pres.degrees();
    let basis = monomials_of_degree(&degrees, d);
    let position: std::collections::HashMap<&Monomial, usize> =
        basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut space = RowSpace::new(basis.len());
    for r in &pres.relations {
        if r.is_zero() {
            continue;
        }
        let e = r
            .homogeneous_degree(&degrees)
            .ok_or(Error::NotHomogeneous)?;
        if e > d {
            continue;
        }
        for m in monomials_of_degree(&degrees, d - e) {
            let mut row = vec![Rational::zero(); basis.len()];
            for (t, c) in r.mul_monomial(&m).terms() {
                row[position[t]] = c.clone();
            }
            space.insert(&row);
            if space.is_full() {
                return Ok(0);
            }
        }
    }
    Ok(basis.len() - space.rank())
}

/// Matrix whose rows list each relation's coefficients on a shared monomial
/// support; handy for comparing presentations term by term.
pub fn coefficient_matrix(relations: &[MultiPoly]) -> RationalMatrix {
    let support: Vec<Monomial> = relations
        .iter()
        .flat_map(|r| r.terms().map(|(m, _)| m.clone()))
        .sorted()
        .dedup()
        .collect();
    RationalMatrix::from_rows(
        relations
            .iter()
            .map(|r| support.iter().map(|m| r.coeff(m)).collect())
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> IntegerPolynomial {
        IntegerPolynomial::from_i64(c)
    }

    #[test]
    fn fixed_subspaces() {
        let z = enumerate_fixed_subspaces(2, 1).unwrap();
        assert_eq!(
            z.iter().map(|s| s.indices().to_vec()).collect_vec(),
            vec![vec![1], vec![2]]
        );
        assert_eq!(enumerate_fixed_subspaces(4, 2).unwrap().len(), 6);
        assert_eq!(enumerate_fixed_subspaces(10, 3).unwrap().len(), 120);
        assert_eq!(enumerate_fixed_subspaces(3, 0).unwrap().len(), 1);
        assert!(matches!(
            enumerate_fixed_subspaces(2, 3),
            Err(Error::InvalidDimensions { .. })
        ));
        assert!(FixedSubspace::new(vec![2, 1], 3).is_err());
        assert!(FixedSubspace::new(vec![1, 4], 3).is_err());
    }

    #[test]
    fn weight_system_validation() {
        assert_eq!(
            WeightSystem::new(vec![1, 1], 2),
            Err(Error::DuplicateWeights)
        );
        assert_eq!(
            WeightSystem::new(vec![1, 2], 0),
            Err(Error::InvalidExponent)
        );
    }

    #[test]
    fn minus_cells() {
        let ws = WeightSystem::standard(4);
        let sub = |v: Vec<usize>| FixedSubspace::new(v, 4).unwrap();
        assert_eq!(minus_cell_dimension(&sub(vec![1, 2]), &ws), 0);
        assert_eq!(minus_cell_dimension(&sub(vec![3, 4]), &ws), 4);
        assert_eq!(minus_cell_dimension(&sub(vec![1, 3]), &ws), 1);
        assert_eq!(plus_cell_dimension(&sub(vec![1, 3]), &ws), 3);
    }

    #[test]
    fn poincare_examples() {
        let p42 = poincare_from_cells(&WeightSystem::standard(4), 2).unwrap();
        assert_eq!(p42, poly(&[1, 1, 2, 1, 1]));
        assert_eq!(
            poincare_from_cells(&WeightSystem::standard(5), 0).unwrap(),
            poly(&[1])
        );
        assert_eq!(
            poincare_from_cells(&WeightSystem::standard(6), 2).unwrap(),
            poly(&[1, 1, 2, 2, 3, 2, 2, 1, 1])
        );
        assert_eq!(
            poincare_from_regular_sequence(&[2, 3, 1, 2], 1).unwrap(),
            p42
        );
        assert_eq!(
            poincare_from_regular_sequence(&[1], 1).unwrap(),
            poly(&[1, 1])
        );
        assert_eq!(poincare_from_regular_sequence(&[], 1).unwrap(), poly(&[1]));
        // (1 - q^3) / (1 - q^2) is not a polynomial
        assert_eq!(
            poincare_from_regular_sequence(&[2], 1),
            Err(Error::NotPolynomial)
        );
    }

    #[test]
    fn degrees() {
        assert_eq!(w_degree(4, 1, 6, 2).unwrap(), 1);
        assert_eq!(w_degree(1, 2, 6, 2).unwrap(), 5);
        assert_eq!(w_degree(1, 1, 4, 2).unwrap(), 2);
        assert!(w_degree(0, 1, 4, 2).is_err());
        assert!(w_degree(1, 3, 4, 2).is_err());
        assert!(w_degree(3, 1, 4, 2).is_err());
    }

    #[test]
    fn relation_examples() {
        assert_eq!(
            relation_generator(1, 2, 6, 2).unwrap().to_string(),
            "-1*w_1_1*w_4_2"
        );
        assert_eq!(
            relation_generator(2, 1, 6, 2).unwrap().to_string(),
            "-1*w_2_1*w_4_1 - 1*w_1_1 + 1*w_2_2"
        );
        assert_eq!(
            relation_generator(1, 1, 4, 2).unwrap().to_string(),
            "-1*w_1_1*w_2_1 + 1*w_1_2"
        );
        assert!(relation_generator(5, 1, 6, 2).is_err());
    }

    #[test]
    fn presentation_shapes() {
        let p = ordinary_presentation(4, 2).unwrap();
        assert_eq!(p.degrees(), vec![2, 3, 1, 2]);
        assert_eq!(
            p.relation_degrees(),
            vec![Some(3), Some(4), Some(2), Some(3)]
        );
        let p = ordinary_presentation(6, 2).unwrap();
        assert_eq!((p.variables.len(), p.relations.len()), (8, 8));
        assert!(ordinary_presentation(4, 4).is_err());
        assert!(ordinary_presentation(4, 0).is_err());
    }

    #[test]
    fn equivariant_examples() {
        let e = equivariant_presentation(6, 2).unwrap();
        assert_eq!(e.variables.last().unwrap(), &("v".to_string(), 1));
        assert_eq!(
            e.relations[0].to_string(),
            "2*w_1_1*w_4_1 + 8*w_1_1*v - 2*w_1_2"
        );
        let e = equivariant_presentation(4, 2).unwrap();
        // (i, j) = (2, 1): 2 v w_21 - 2(-w_11 - w_21^2 + w_22)
        assert_eq!(
            e.relations[2].to_string(),
            "2*w_2_1^2 + 2*w_2_1*v + 2*w_1_1 - 2*w_2_2"
        );
        assert!(e.is_homogeneous());
    }

    #[test]
    fn graded_dimension_examples() {
        let p = ordinary_presentation(4, 2).unwrap();
        assert_eq!(graded_dimension(&p, 0).unwrap(), 1);
        assert_eq!(graded_dimension(&p, 2).unwrap(), 2);
        assert_eq!(graded_dimension(&p, 5).unwrap(), 0);
    }

    #[test]
    fn monomial_counts() {
        assert_eq!(monomials_of_degree(&[1, 1, 1], 2).len(), 6);
        assert_eq!(monomials_of_degree(&[2, 3], 1).len(), 0);
        assert_eq!(monomials_of_degree(&[2, 3], 0).len(), 1);
    }
}
