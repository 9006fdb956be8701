use num_traits::{One, Zero};

use super::{Partition, Rational, RationalMatrix};

/// `h_0, ..., h_max` evaluated at `points`, by the recurrence over the
/// number of variables: `h_m(x_1..x_r) = h_m(x_1..x_{r-1}) + x_r h_{m-1}(x_1..x_r)`.
pub fn complete_homogeneous(max: usize, points: &[Rational]) -> Vec<Rational> {
    let mut h = vec![Rational::zero(); max + 1];
    h[0] = Rational::one();
    for x in points {
        for m in 1..=max {
            let add = x * &h[m - 1];
            h[m] += add;
        }
    }
    h
}

/// Value of the Schur polynomial `s_mu` at `points`, via the Jacobi-Trudi
/// determinant `det(h_{mu_i - i + j})`.
///
/// Repeated points are fine. If `mu` has more parts than there are points
/// the value is zero.
pub fn schur_evaluate(mu: &Partition, points: &[Rational]) -> Rational {
    let l = mu.len();
    if l == 0 {
        return Rational::one();
    }
    if l > points.len() {
        return Rational::zero();
    }
    let max = mu.largest_part() as usize + l;
    let h = complete_homogeneous(max, points);
    let entry = |i: usize, j: usize| {
        let idx = mu.part(i) as i64 - i as i64 + j as i64;
        if idx < 0 {
            Rational::zero()
        } else {
            h[idx as usize].clone()
        }
    };
    let rows = (0..l)
        .map(|i| (0..l).map(|j| entry(i, j)).collect())
        .collect();
    RationalMatrix::from_rows(rows)
        .determinant()
        .expect("Jacobi-Trudi matrix is square")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn pts(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rat(x)).collect()
    }

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(schur_evaluate(&Partition::empty(), &pts(&[3, 5])), rat(1));
        assert_eq!(schur_evaluate(&Partition::empty(), &[]), rat(1));
        assert_eq!(schur_evaluate(&p(&[1]), &pts(&[6, 12, 18, 30])), rat(66));
        assert_eq!(schur_evaluate(&p(&[1, 1]), &pts(&[1, 2])), rat(2));
        assert_eq!(schur_evaluate(&p(&[2]), &pts(&[1, 2])), rat(7));
        assert_eq!(schur_evaluate(&p(&[1, 1, 1]), &pts(&[1, 2])), rat(0));
    }

    #[test]
    fn repeated_points() {
        // s_(2,1)(1,1,1) = number of SSYT of shape (2,1) in 3 letters = 8
        assert_eq!(schur_evaluate(&p(&[2, 1]), &pts(&[1, 1, 1])), rat(8));
    }
}
