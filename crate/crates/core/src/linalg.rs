//! Dense Gaussian elimination over a field.

use crate::field::Field;
use crate::par::{for_each_mut, Execution};

/// Rank of the matrix whose rows are `rows`. Rows may have unequal lengths;
/// missing entries are zero.
pub fn rank<K: Field>(mut rows: Vec<Vec<K>>, exec: Execution) -> usize {
    let ncols = rows.iter().map(|r| r.len()).max().unwrap_or(0);
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(pivot) = (r..rows.len()).find(|&i| rows[i].get(col).is_some_and(|c| !c.is_zero())) else {
            continue;
        };
        rows.swap(r, pivot);
        let inv = rows[r][col].inv().expect("nonzero pivot");
        let prow: Vec<K> = rows[r].iter().map(|c| c.mul(&inv)).collect();
        for_each_mut(exec, &mut rows[r + 1..], |row| {
            let Some(c) = row.get(col).filter(|c| !c.is_zero()).cloned() else {
                return;
            };
            if row.len() < prow.len() {
                let zero = K::zero(&c.descriptor());
                row.resize(prow.len(), zero);
            }
            for (x, p) in row[col..].iter_mut().zip(&prow[col..]) {
                if !p.is_zero() {
                    x.sub_mul_assign(&c, p);
                }
            }
        });
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{rational_int, Fp, PrimeField, Rational};

    #[test]
    fn rank_of_small_matrices() {
        let q = |rows: &[&[i64]]| -> Vec<Vec<Rational>> { rows.iter().map(|r| r.iter().map(|&v| rational_int(v)).collect()).collect() };
        assert_eq!(rank(q(&[&[1, 2], &[2, 4]]), Execution::Sequential), 1);
        assert_eq!(rank(q(&[&[1, 2, 3], &[0, 1, 1], &[1, 3, 4]]), Execution::Sequential), 2);
        assert_eq!(rank(q(&[&[0, 0], &[0, 0]]), Execution::Sequential), 0);
        assert_eq!(rank(q(&[&[1], &[0, 1], &[0, 0, 1]]), Execution::Parallel), 3);
        let fp = PrimeField::new(7).unwrap();
        let m: Vec<Vec<Fp>> = vec![vec![fp.element(1), fp.element(3)], vec![fp.element(2), fp.element(6)]];
        assert_eq!(rank(m, Execution::Parallel), 1);
    }
}
