//! Integer linear algebra: Smith normal form invariants and exact determinants.
//!
//! Entries are `i128`. Pivoting always picks the smallest nonzero entry and
//! reduces by remainders, which keeps intermediate values bounded for the
//! small presentation and intersection matrices handled in this crate.

/// Invariant factors of `Z^cols / rowspace(m)`.
///
/// Returns the nontrivial torsion factors `d1 | d2 | ...` (all > 1), followed
/// by one `0` per free summand.
pub fn cokernel_invariants(m: &[Vec<i128>], cols: usize) -> Vec<i128> {
    let diag = smith_diagonal(m, cols);
    let rank = diag.len();
    let mut out: Vec<i128> = diag.into_iter().filter(|&d| d != 1).collect();
    out.extend(std::iter::repeat_n(0, cols - rank));
    out
}

/// Nonzero diagonal of the Smith normal form, with `d1 | d2 | ...`, all positive.
#[allow(clippy::needless_range_loop)]
pub fn smith_diagonal(m: &[Vec<i128>], cols: usize) -> Vec<i128> {
    let mut a: Vec<Vec<i128>> = m
        .iter()
        .map(|r| {
            assert_eq!(r.len(), cols, "ragged matrix");
            r.clone()
        })
        .collect();
    let rows = a.len();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // smallest nonzero |entry| in the trailing block
        let mut best: Option<(usize, usize)> = None;
        for (i, row) in a.iter().enumerate().skip(t) {
            for (j, &v) in row.iter().enumerate().skip(t) {
                if v != 0 && best.is_none_or(|(bi, bj)| v.abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let p = a[t][t];
            let mut dirty = false;
            for i in t + 1..rows {
                let q = a[i][t].div_euclid(p);
                if q != 0 {
                    for j in t..cols {
                        a[i][j] -= q * a[t][j];
                    }
                }
                if a[i][t] != 0 {
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                let q = a[t][j].div_euclid(p);
                if q != 0 {
                    for row in a.iter_mut().skip(t) {
                        row[j] -= q * row[t];
                    }
                }
                if a[t][j] != 0 {
                    dirty = true;
                }
            }
            if !dirty {
                // pivot must divide the whole trailing block
                let bad = (t + 1..rows)
                    .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                    .find(|&(i, j)| a[i][j] % p != 0);
                match bad {
                    None => break,
                    Some((i, _)) => {
                        for j in t..cols {
                            let v = a[i][j];
                            a[t][j] += v;
                        }
                        continue;
                    }
                }
            }
            // move the smallest entry of row t / column t into the pivot
            let mut bi = (t, t);
            for i in t..rows {
                if a[i][t] != 0 && a[i][t].abs() < a[bi.0][bi.1].abs() {
                    bi = (i, t);
                }
            }
            for j in t..cols {
                if a[t][j] != 0 && a[t][j].abs() < a[bi.0][bi.1].abs() {
                    bi = (t, j);
                }
            }
            if bi.0 != t {
                a.swap(t, bi.0);
            }
            if bi.1 != t {
                for row in a.iter_mut() {
                    row.swap(t, bi.1);
                }
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    diag
}

/// Rank over the rationals.
pub fn rank(m: &[Vec<i128>], cols: usize) -> usize {
    smith_diagonal(m, cols).len()
}

/// Exact determinant of a square matrix by fraction-free (Bareiss) elimination.
pub fn determinant(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m.to_vec();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

/// Leading principal minors `det(M[..k, ..k])` for `k = 1..=n`.
pub fn leading_minors(m: &[Vec<i128>]) -> Vec<i128> {
    (1..=m.len())
        .map(|k| {
            let sub: Vec<Vec<i128>> = m[..k].iter().map(|r| r[..k].to_vec()).collect();
            determinant(&sub)
        })
        .collect()
}

pub fn transpose(m: &[Vec<i128>], cols: usize) -> Vec<Vec<i128>> {
    (0..cols)
        .map(|j| m.iter().map(|r| r[j]).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_and_free() {
        assert_eq!(cokernel_invariants(&[], 1), vec![0]);
        assert_eq!(cokernel_invariants(&[vec![5]], 1), vec![5]);
        assert_eq!(cokernel_invariants(&[vec![0, 0]], 2), vec![0, 0]);
    }

    #[test]
    fn divisibility_chain() {
        // Z/4 x Z/6 = Z/2 x Z/12
        let m = vec![vec![4, 0], vec![0, 6]];
        assert_eq!(cokernel_invariants(&m, 2), vec![2, 12]);
        let m = vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]];
        assert_eq!(smith_diagonal(&m, 3), vec![2, 6, 12]);
    }

    #[test]
    fn determinant_matches_expansion() {
        let m = vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]];
        assert_eq!(determinant(&m), 4);
        let m = vec![vec![0, 1], vec![1, 0]];
        assert_eq!(determinant(&m), -1);
        assert_eq!(determinant(&[vec![1, 2], vec![2, 4]]), 0);
        assert_eq!(leading_minors(&[vec![2, -1], vec![-1, 2]]), vec![2, 3]);
    }

    #[test]
    fn det_agrees_with_smith_product() {
        let m = vec![vec![3, 1, 4], vec![1, 5, 9], vec![2, 6, 5]];
        let d = determinant(&m).abs();
        let prod: i128 = smith_diagonal(&m, 3).iter().product();
        assert_eq!(d, prod);
    }
}
