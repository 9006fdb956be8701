//! Schur evaluations on fixed points and the filtration they induce on the
//! ring of functions of a finite fixed-point set.
//!
//! For fixed points `W_I` of `Gr(n-k, V)` the function attached to a
//! partition `mu` is `I -> s_mu(a_{i_1}, ..., a_{i_{n-k}})`. The `p`-th
//! filtration piece is spanned by the functions with `|mu| <= p`; the jump in
//! its dimension from `p - 1` to `p` is the Betti number `b_p = dim H^{2p}`.

use std::fmt;

use crate::algebra::{
    partitions_in_box, schur_evaluate, strip_cyclotomic_factors, IntegerPolynomial, Partition,
    Rational, RationalMatrix, RowSpace,
};
use crate::gotzmann::{hilb_fixed_subspaces, TorusAction};
use crate::grassmann::{FixedSubspace, WeightSystem};
use crate::{Error, Result};

/// Partitions with at most `rows` parts, each at most `cols`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PartitionBox {
    pub rows: usize,
    pub cols: u32,
}

impl PartitionBox {
    /// The `(n-k) x k` box of `Gr(n-k, V)`.
    pub fn grassmannian(n: usize, k: usize) -> Self {
        PartitionBox {
            rows: n - k,
            cols: k as u32,
        }
    }

    pub fn area(&self) -> usize {
        self.rows * self.cols as usize
    }

    pub fn contains(&self, mu: &Partition) -> bool {
        mu.fits_box(self.rows, self.cols)
    }

    /// Box partitions of size exactly `p`, descending lexicographic.
    pub fn partitions_of(&self, p: usize) -> Vec<Partition> {
        partitions_in_box(self.rows, self.cols, p)
    }

    /// Box partitions of size at most `p`, by size then descending lexicographic.
    pub fn partitions_up_to(&self, p: usize) -> Vec<Partition> {
        (0..=p).flat_map(|s| self.partitions_of(s)).collect()
    }

    pub fn check(&self, mu: &Partition) -> Result<()> {
        if self.contains(mu) {
            Ok(())
        } else {
            Err(Error::BoxViolation {
                partition: mu.to_string(),
                rows: self.rows,
                cols: self.cols as usize,
            })
        }
    }
}

/// Box implied by a set of fixed points: `n - k` rows and `k` columns.
pub fn box_for(points: &[FixedSubspace], ws: &WeightSystem) -> Result<PartitionBox> {
    let n = ws.n();
    let dim = points.first().map_or(n, FixedSubspace::dim);
    if let Some(bad) = points.iter().find(|p| p.dim() != dim) {
        return Err(Error::InvalidSubspace {
            indices: bad.indices().to_vec(),
            n,
        });
    }
    if let Some(bad) = points
        .iter()
        .find(|p| p.indices().last().is_some_and(|&i| i > n))
    {
        return Err(Error::InvalidSubspace {
            indices: bad.indices().to_vec(),
            n,
        });
    }
    Ok(PartitionBox {
        rows: dim,
        cols: (n - dim) as u32,
    })
}

/// `s_mu` evaluated at the weights of `W_I`.
pub fn schur_at(mu: &Partition, point: &FixedSubspace, ws: &WeightSystem) -> Rational {
    schur_evaluate(mu, &point.weights_in(ws))
}

fn schur_row(mu: &Partition, points: &[FixedSubspace], ws: &WeightSystem) -> Vec<Rational> {
    points.iter().map(|pt| schur_at(mu, pt, ws)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvaluationMatrix {
    pub row_labels: Vec<Partition>,
    pub col_labels: Vec<FixedSubspace>,
    pub entries: RationalMatrix,
}

impl EvaluationMatrix {
    pub fn rank(&self) -> usize {
        self.entries.rank()
    }
}

/// Entry `(mu, I)` is `s_mu(a_{i_1}, ..., a_{i_{n-k}})`.
pub fn evaluation_matrix(
    partitions: &[Partition],
    points: &[FixedSubspace],
    ws: &WeightSystem,
) -> Result<EvaluationMatrix> {
    let bx = box_for(points, ws)?;
    for mu in partitions {
        bx.check(mu)?;
    }
    let rows = partitions
        .iter()
        .map(|mu| schur_row(mu, points, ws))
        .collect();
    Ok(EvaluationMatrix {
        row_labels: partitions.to_vec(),
        col_labels: points.to_vec(),
        entries: RationalMatrix::from_rows(rows),
    })
}

/// Cumulative filtration ranks `r_0..r_P` and Betti numbers `b_p = r_p - r_{p-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    pub cumulative_ranks: Vec<usize>,
    pub betti: Vec<usize>,
    pub fixed_points: usize,
}

impl BettiTable {
    fn from_ranks(cumulative_ranks: Vec<usize>, fixed_points: usize) -> Self {
        let betti = cumulative_ranks
            .iter()
            .enumerate()
            .map(|(p, &r)| {
                if p == 0 {
                    r
                } else {
                    r - cumulative_ranks[p - 1]
                }
            })
            .collect();
        BettiTable {
            cumulative_ranks,
            betti,
            fixed_points,
        }
    }

    pub fn total(&self) -> usize {
        self.betti.iter().sum()
    }

    pub fn is_palindromic(&self) -> bool {
        let b = &self.betti;
        let end = b.iter().rposition(|&x| x != 0).map_or(0, |i| i + 1);
        let b = &b[..end];
        b.iter().eq(b.iter().rev())
    }

    /// `sum_p b_p q^p`.
    pub fn poincare_q(&self) -> IntegerPolynomial {
        IntegerPolynomial::from_i64(&self.betti.iter().map(|&b| b as i64).collect::<Vec<_>>())
    }

    /// `sum_p b_p t^{2p}`.
    pub fn poincare_t(&self) -> IntegerPolynomial {
        self.poincare_q().inflate(2)
    }
}

/// Schur partitions selected per filtration degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchurBasis {
    pub by_degree: Vec<Vec<Partition>>,
}

/// A degree where pure Schur rows of that size raise the rank by less than a
/// requested Betti number.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Deficiency {
    pub degree: usize,
    pub expected: usize,
    pub found: usize,
}

impl SchurBasis {
    pub fn all(&self) -> impl Iterator<Item = &Partition> {
        self.by_degree.iter().flatten()
    }

    pub fn counts(&self) -> Vec<usize> {
        self.by_degree.iter().map(Vec::len).collect()
    }

    /// Degrees where the selection falls short of `target[p]`.
    pub fn deficiencies(&self, target: &[usize]) -> Vec<Deficiency> {
        target
            .iter()
            .enumerate()
            .filter_map(|(p, &expected)| {
                let found = self.by_degree.get(p).map_or(0, Vec::len);
                (found < expected).then_some(Deficiency {
                    degree: p,
                    expected,
                    found,
                })
            })
            .collect()
    }
}

enum Stop {
    At(usize),
    Saturation,
}

fn scan(
    points: &[FixedSubspace],
    ws: &WeightSystem,
    bx: PartitionBox,
    stop: Stop,
) -> Result<(Vec<usize>, SchurBasis)> {
    let implied = box_for(points, ws)?;
    if !points.is_empty() && implied != bx {
        return Err(Error::InvalidSubspace {
            indices: points[0].indices().to_vec(),
            n: ws.n(),
        });
    }
    let mut space = RowSpace::new(points.len());
    let mut ranks = Vec::new();
    let mut selected = Vec::new();
    let mut p = 0;
    loop {
        let mut chosen = Vec::new();
        for mu in bx.partitions_of(p) {
            if space.insert(&schur_row(&mu, points, ws)) {
                chosen.push(mu);
            }
        }
        ranks.push(space.rank());
        selected.push(chosen);
        let done = match stop {
            Stop::At(p_max) => p >= p_max,
            Stop::Saturation => space.is_full() || p >= bx.area(),
        };
        if done {
            break;
        }
        p += 1;
    }
    Ok((
        ranks,
        SchurBasis {
            by_degree: selected,
        },
    ))
}

/// Filtration ranks for `p = 0..=p_max`: `r_p` is the rank of the Schur rows
/// with `|mu| <= p` on `points`.
pub fn filtration_betti(
    points: &[FixedSubspace],
    ws: &WeightSystem,
    bx: PartitionBox,
    p_max: usize,
) -> Result<BettiTable> {
    let (ranks, _) = scan(points, ws, bx, Stop::At(p_max))?;
    Ok(BettiTable::from_ranks(ranks, points.len()))
}

/// Like [`filtration_betti`] but stops at the first `p` where the rows span
/// all functions on `points` (or the box is exhausted).
pub fn saturated_betti(
    points: &[FixedSubspace],
    ws: &WeightSystem,
    bx: PartitionBox,
) -> Result<BettiTable> {
    let (ranks, _) = scan(points, ws, bx, Stop::Saturation)?;
    Ok(BettiTable::from_ranks(ranks, points.len()))
}

/// Greedy row basis: for each `p`, the partitions of size `p` (scanned in
/// descending lexicographic order) whose rows are independent of everything
/// chosen before.
pub fn select_schur_basis(
    points: &[FixedSubspace],
    ws: &WeightSystem,
    bx: PartitionBox,
    p_max: usize,
) -> Result<SchurBasis> {
    Ok(scan(points, ws, bx, Stop::At(p_max))?.1)
}

/// Fixed points of `Hilb_k(P^2)` inside `Gr(n_k - k, R_k)` together with the
/// default torus weights and the ambient box.
pub fn hilb_setup(k: u32) -> Result<(Vec<FixedSubspace>, WeightSystem, PartitionBox)> {
    let ws = TorusAction::default_for(k)?.weight_system();
    let points = hilb_fixed_subspaces(k)?;
    let bx = PartitionBox::grassmannian(ws.n(), k as usize);
    Ok((points, ws, bx))
}

/// Filtration Betti numbers on the Hilbert-scheme fixed points, run to saturation.
pub fn hilb_betti(k: u32) -> Result<BettiTable> {
    let (points, ws, bx) = hilb_setup(k)?;
    saturated_betti(&points, &ws, bx)
}

pub fn hilb_schur_basis(k: u32) -> Result<SchurBasis> {
    let (points, ws, bx) = hilb_setup(k)?;
    let p_max = hilb_betti(k)?.betti.len() - 1;
    select_schur_basis(&points, &ws, bx, p_max)
}

/// `sum_p b_p t^{2p}` from [`hilb_betti`].
pub fn poincare_of_hilb(k: u32) -> Result<IntegerPolynomial> {
    Ok(hilb_betti(k)?.poincare_t())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    NotRegular,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::NotRegular => "NOT_REGULAR",
            Verdict::Inconclusive => "INCONCLUSIVE",
        })
    }
}

/// A regular `(G_a, G_m)`-variety has a Poincaré polynomial whose roots are
/// all roots of unity, so a non-cyclotomic factor rules regularity out. The
/// converse does not hold, hence `Inconclusive` rather than "regular".
pub fn b2_regularity_verdict(p: &IntegerPolynomial) -> Result<Verdict> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(if strip_cyclotomic_factors(p).is_cyclotomic_product() {
        Verdict::Inconclusive
    } else {
        Verdict::NotRegular
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{gaussian_binomial, rat};
    use crate::grassmann::enumerate_fixed_subspaces;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn evaluation_rows() {
        let ws = TorusAction::default_for(2).unwrap().weight_system();
        let z = enumerate_fixed_subspaces(6, 2).unwrap();
        let m = evaluation_matrix(&[Partition::empty(), p(&[1])], &z, &ws).unwrap();
        assert!(m.entries.row(0).iter().all(|x| *x == rat(1)));
        assert_eq!(z[0].indices(), &[1, 2, 3, 4]);
        assert_eq!(m.entries.get(1, 0), &rat(66));
        assert!(matches!(
            evaluation_matrix(&[p(&[3])], &z, &ws),
            Err(Error::BoxViolation { .. })
        ));
        assert!(matches!(
            evaluation_matrix(&[p(&[1, 1, 1, 1, 1])], &z, &ws),
            Err(Error::BoxViolation { .. })
        ));
    }

    #[test]
    fn grassmannian_betti_42() {
        let ws = WeightSystem::standard(4);
        let z = enumerate_fixed_subspaces(4, 2).unwrap();
        let bx = PartitionBox::grassmannian(4, 2);
        let all = bx.partitions_up_to(bx.area());
        assert_eq!(evaluation_matrix(&all, &z, &ws).unwrap().rank(), all.len());
        let t = filtration_betti(&z, &ws, bx, 4).unwrap();
        assert_eq!(t.betti, vec![1, 1, 2, 1, 1]);
        assert_eq!(t.poincare_q(), gaussian_binomial(4, 2));
        assert!(t.is_palindromic());
        let basis = select_schur_basis(&z, &ws, bx, 4).unwrap();
        assert_eq!(basis.by_degree[0], vec![Partition::empty()]);
        assert_eq!(basis.by_degree[1], vec![p(&[1])]);
        assert_eq!(basis.counts(), t.betti);
    }

    #[test]
    fn hilb_one_is_p2() {
        assert_eq!(hilb_betti(1).unwrap().betti, vec![1, 1, 1]);
        assert_eq!(
            poincare_of_hilb(1).unwrap(),
            IntegerPolynomial::from_i64(&[1, 0, 1, 0, 1])
        );
    }

    #[test]
    fn deficiency_report() {
        let basis = hilb_schur_basis(2).unwrap();
        let d = basis.deficiencies(&[1, 2, 3, 2, 1]);
        assert_eq!(
            d.first().map(|d| (d.degree, d.expected, d.found)),
            Some((1, 2, 1))
        );
        assert!(basis.deficiencies(&basis.counts()).is_empty());
    }

    #[test]
    fn verdicts() {
        let g3 = IntegerPolynomial::from_i64(&[1, 0, 2, 0, 5, 0, 6, 0, 5, 0, 2, 0, 1]);
        assert_eq!(b2_regularity_verdict(&g3).unwrap(), Verdict::NotRegular);
        assert_eq!(
            b2_regularity_verdict(&gaussian_binomial(4, 2)).unwrap(),
            Verdict::Inconclusive
        );
        assert_eq!(
            b2_regularity_verdict(&IntegerPolynomial::one()).unwrap(),
            Verdict::Inconclusive
        );
        assert_eq!(
            b2_regularity_verdict(&IntegerPolynomial::zero()),
            Err(Error::ZeroPolynomial)
        );
        assert_eq!(Verdict::NotRegular.to_string(), "NOT_REGULAR");
    }
}
