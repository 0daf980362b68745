//! Integer points of `{e : D e = b, e_g ≥ lo_g}` for a 4-row degree matrix `D`.
//!
//! The equation is solved once over the integers by unimodular column
//! reduction, which parametrizes every solution as `e = p + K λ`. The
//! inequalities then cut out a polyhedron in `λ`-space; when its recession
//! cone is zero the integer points are enumerated coordinate by coordinate,
//! bounding each coordinate by Fourier–Motzkin projection.

use std::collections::BTreeMap;

/// A constraint `a · λ ≥ c`.
type Row = (Vec<i128>, i128);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Unbounded;

#[derive(Debug, Clone)]
pub(crate) struct Lattice {
    lower: Vec<Option<i64>>,
    /// Column-echelon part of `D U`; `h[row][col]`.
    h: Vec<Vec<i128>>,
    pivot_rows: Vec<usize>,
    /// Columns of `U` paired with `h`, stored as `n`-vectors.
    u_part: Vec<Vec<i128>>,
    /// Integer kernel basis of `D`, stored as `n`-vectors.
    kernel: Vec<Vec<i128>>,
    bounded: bool,
}

impl Lattice {
    pub(crate) fn new(cols: &[[i64; 4]], lower: Vec<Option<i64>>) -> Self {
        assert_eq!(cols.len(), lower.len());
        let n = cols.len();
        let mut m: Vec<Vec<i128>> = (0..4)
            .map(|r| cols.iter().map(|c| c[r] as i128).collect())
            .collect();
        let mut u: Vec<Vec<i128>> = (0..n)
            .map(|i| (0..n).map(|j| i128::from(i == j)).collect())
            .collect();
        let mut piv = 0usize;
        let mut pivot_rows = Vec::new();
        for row in 0..4 {
            loop {
                let nz: Vec<usize> = (piv..n).filter(|&j| m[row][j] != 0).collect();
                let Some(&j0) = nz.iter().min_by_key(|&&j| m[row][j].abs()) else {
                    break;
                };
                if nz.len() == 1 {
                    swap_cols(&mut m, j0, piv);
                    swap_cols(&mut u, j0, piv);
                    pivot_rows.push(row);
                    piv += 1;
                    break;
                }
                for &j in &nz {
                    if j != j0 {
                        let q = m[row][j] / m[row][j0];
                        sub_col(&mut m, j, j0, q);
                        sub_col(&mut u, j, j0, q);
                    }
                }
            }
        }
        let col =
            |mat: &Vec<Vec<i128>>, j: usize| -> Vec<i128> { mat.iter().map(|r| r[j]).collect() };
        let h = m.iter().map(|r| r[..piv].to_vec()).collect();
        let u_part = (0..piv).map(|j| col(&u, j)).collect();
        let kernel: Vec<Vec<i128>> = (piv..n).map(|j| col(&u, j)).collect();
        let mut lat = Lattice {
            lower,
            h,
            pivot_rows,
            u_part,
            kernel,
            bounded: true,
        };
        let cone: Vec<Vec<i128>> = lat.constrained_kernel_rows();
        lat.bounded = !cone_is_nonzero(&cone, lat.kernel.len());
        lat
    }

    /// Whether the admissible exponent cone meets `ker D` only in zero.
    pub(crate) fn is_bounded(&self) -> bool {
        self.bounded
    }

    fn constrained_kernel_rows(&self) -> Vec<Vec<i128>> {
        self.lower
            .iter()
            .enumerate()
            .filter(|(_, lo)| lo.is_some())
            .map(|(g, _)| self.kernel.iter().map(|k| k[g]).collect())
            .collect()
    }

    fn particular(&self, rhs: [i64; 4]) -> Option<Vec<i128>> {
        let r = self.u_part.len();
        let mut y = vec![0i128; r];
        for k in 0..r {
            let prow = self.pivot_rows[k];
            let mut acc = rhs[prow] as i128;
            for (l, yl) in y.iter().enumerate().take(k) {
                acc -= self.h[prow][l] * yl;
            }
            let d = self.h[prow][k];
            if acc % d != 0 {
                return None;
            }
            y[k] = acc / d;
        }
        for (row, &b) in rhs.iter().enumerate() {
            let v: i128 = (0..r).map(|k| self.h[row][k] * y[k]).sum();
            if v != b as i128 {
                return None;
            }
        }
        let n = self.lower.len();
        let mut e = vec![0i128; n];
        for (k, col) in self.u_part.iter().enumerate() {
            for g in 0..n {
                e[g] += col[g] * y[k];
            }
        }
        Some(e)
    }

    /// All admissible solutions of `D e = rhs` that also satisfy every
    /// `a · e ≤ c` in `extra`, sorted lexicographically.
    pub(crate) fn solve(
        &self,
        rhs: [i64; 4],
        extra: &[(Vec<i64>, i64)],
    ) -> Result<Vec<Vec<i64>>, Unbounded> {
        let Some(p) = self.particular(rhs) else {
            return Ok(Vec::new());
        };
        let k = self.kernel.len();
        let mut rows: Vec<Row> = Vec::new();
        for (g, lo) in self.lower.iter().enumerate() {
            if let Some(lo) = lo {
                let a = self.kernel.iter().map(|col| col[g]).collect();
                rows.push((a, *lo as i128 - p[g]));
            }
        }
        for (w, c) in extra {
            let a = self
                .kernel
                .iter()
                .map(|col| -col.iter().zip(w).map(|(x, &y)| x * y as i128).sum::<i128>())
                .collect();
            let wp: i128 = p.iter().zip(w).map(|(x, &y)| x * y as i128).sum();
            rows.push((a, wp - *c as i128));
        }
        let bounded = if extra.is_empty() {
            self.bounded
        } else {
            let cone: Vec<Vec<i128>> = rows.iter().map(|(a, _)| a.clone()).collect();
            !cone_is_nonzero(&cone, k)
        };
        if !bounded {
            return if rationally_feasible(rows, k) {
                Err(Unbounded)
            } else {
                Ok(Vec::new())
            };
        }
        let mut lambdas = Vec::new();
        enumerate(&rows, k, &mut Vec::new(), &mut lambdas)?;
        let mut out: Vec<Vec<i64>> = lambdas
            .into_iter()
            .map(|lam| {
                p.iter()
                    .enumerate()
                    .map(|(g, pg)| {
                        let v = pg
                            + self
                                .kernel
                                .iter()
                                .zip(&lam)
                                .map(|(c, l)| c[g] * l)
                                .sum::<i128>();
                        i64::try_from(v).expect("exponent overflow")
                    })
                    .collect()
            })
            .collect();
        out.sort();
        Ok(out)
    }
}

fn swap_cols(m: &mut [Vec<i128>], a: usize, b: usize) {
    if a != b {
        for r in m.iter_mut() {
            r.swap(a, b);
        }
    }
}

fn sub_col(m: &mut [Vec<i128>], j: usize, j0: usize, q: i128) {
    for r in m.iter_mut() {
        r[j] -= q * r[j0];
    }
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn div_floor(a: i128, b: i128) -> i128 {
    let q = a / b;
    if (a % b != 0) && ((a < 0) != (b < 0)) {
        q - 1
    } else {
        q
    }
}

fn div_ceil(a: i128, b: i128) -> i128 {
    -div_floor(-a, b)
}

/// Eliminates variable `var` from the system. With `integral` set, each
/// derived row is tightened by rounding its constant up after dividing out
/// the content of its coefficients, which is valid for integer points.
fn eliminate(rows: &[Row], var: usize, integral: bool) -> Vec<Row> {
    let mut keep: BTreeMap<Vec<i128>, i128> = BTreeMap::new();
    let mut push = |a: Vec<i128>, c: i128| {
        let g = a.iter().fold(0, |g, &x| gcd(g, x));
        let (a, c) = if g == 0 {
            (a, c)
        } else if integral {
            (a.iter().map(|x| x / g).collect(), div_ceil(c, g))
        } else {
            let g2 = gcd(g, c);
            (a.iter().map(|x| x / g2).collect(), c / g2)
        };
        let slot = keep.entry(a).or_insert(c);
        if c > *slot {
            *slot = c;
        }
    };
    let (mut pos, mut neg) = (Vec::new(), Vec::new());
    for r in rows {
        match r.0[var].signum() {
            1 => pos.push(r),
            -1 => neg.push(r),
            _ => push(r.0.clone(), r.1),
        }
    }
    for p in &pos {
        for q in &neg {
            let (sp, sq) = (-q.0[var], p.0[var]);
            let a = p.0.iter().zip(&q.0).map(|(x, y)| sp * x + sq * y).collect();
            push(a, sp * p.1 + sq * q.1);
        }
    }
    keep.into_iter().collect()
}

fn rationally_feasible(mut rows: Vec<Row>, k: usize) -> bool {
    for var in 0..k {
        rows = eliminate(&rows, var, false);
    }
    rows.iter().all(|(_, c)| *c <= 0)
}

fn cone_is_nonzero(cone: &[Vec<i128>], k: usize) -> bool {
    (0..k).any(|i| {
        [1i128, -1].into_iter().any(|s| {
            let mut rows: Vec<Row> = cone.iter().map(|a| (a.clone(), 0)).collect();
            let mut unit = vec![0; k];
            unit[i] = s;
            rows.push((unit, 1));
            rationally_feasible(rows, k)
        })
    })
}

fn enumerate(
    rows: &[Row],
    k: usize,
    prefix: &mut Vec<i128>,
    out: &mut Vec<Vec<i128>>,
) -> Result<(), Unbounded> {
    if k == 0 {
        if rows.iter().all(|(_, c)| *c <= 0) {
            out.push(prefix.clone());
        }
        return Ok(());
    }
    let mut proj = rows.to_vec();
    for var in 1..k {
        proj = eliminate(&proj, var, true);
    }
    let (mut lo, mut hi): (Option<i128>, Option<i128>) = (None, None);
    for (a, c) in &proj {
        let a0 = a[0];
        if a0 > 0 {
            let b = div_ceil(*c, a0);
            lo = Some(lo.map_or(b, |x| x.max(b)));
        } else if a0 < 0 {
            let b = div_floor(*c, a0);
            hi = Some(hi.map_or(b, |x| x.min(b)));
        } else if *c > 0 {
            return Ok(());
        }
    }
    let (Some(lo), Some(hi)) = (lo, hi) else {
        return Err(Unbounded);
    };
    for x in lo..=hi {
        let sub: Vec<Row> = rows
            .iter()
            .map(|(a, c)| (a[1..].to_vec(), c - a[0] * x))
            .collect();
        prefix.push(x);
        enumerate(&sub, k - 1, prefix, out)?;
        prefix.pop();
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn brute(cols: &[[i64; 4]], lower: &[Option<i64>], rhs: [i64; 4], r: i64) -> Vec<Vec<i64>> {
        let n = cols.len();
        let mut out = Vec::new();
        let mut e = vec![-r; n];
        loop {
            let ok_dom = e
                .iter()
                .zip(lower)
                .all(|(x, lo)| lo.is_none_or(|l| *x >= l));
            let ok_eq = (0..4)
                .all(|row| e.iter().zip(cols).map(|(x, c)| x * c[row]).sum::<i64>() == rhs[row]);
            if ok_dom && ok_eq {
                out.push(e.clone());
            }
            let mut i = 0;
            loop {
                if i == n {
                    out.sort();
                    return out;
                }
                e[i] += 1;
                if e[i] > r {
                    e[i] = -r;
                    i += 1;
                } else {
                    break;
                }
            }
        }
    }

    #[test]
    fn laurent_t_form() {
        // t0, t1, u0, u1, ub
        let cols = [
            [1, 0, 0, 0],
            [1, 0, 0, 0],
            [-1, 1, 0, 0],
            [-1, 0, 1, 0],
            [-1, 0, 0, 1],
        ];
        let lower = vec![Some(0), Some(0), None, None, None];
        let lat = Lattice::new(&cols, lower);
        assert!(lat.is_bounded());
        assert_eq!(lat.solve([0, 0, 0, 0], &[]).unwrap(), vec![vec![0; 5]]);
        assert_eq!(
            lat.solve([0, 1, 0, 0], &[]).unwrap(),
            vec![vec![0, 1, 1, 0, 0], vec![1, 0, 1, 0, 0]]
        );
        assert!(lat.solve([-1, 0, 0, 0], &[]).unwrap().is_empty());
    }

    #[test]
    fn detects_degree_zero_direction() {
        let cols = [[1, 0, 0, 0], [-1, 0, 0, 0]];
        let lat = Lattice::new(&cols, vec![Some(0), Some(0)]);
        assert!(!lat.is_bounded());
        assert_eq!(lat.solve([2, 0, 0, 0], &[]), Err(Unbounded));
        // capping the total exponent restores finiteness
        let sols = lat.solve([2, 0, 0, 0], &[(vec![1, 1], 6)]).unwrap();
        assert_eq!(sols, vec![vec![2, 0], vec![3, 1], vec![4, 2]]);
    }

    #[test]
    fn non_unit_pivots() {
        let cols = [[2, 0, 0, 0], [0, 3, 0, 0]];
        let lat = Lattice::new(&cols, vec![None, Some(0)]);
        assert!(lat.solve([1, 0, 0, 0], &[]).unwrap().is_empty());
        assert_eq!(lat.solve([4, 6, 0, 0], &[]).unwrap(), vec![vec![2, 2]]);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(60))]
        #[test]
        fn matches_brute_force(
            raw in prop::collection::vec((prop::array::uniform4(-2i64..=2), 0u8..3), 1..5),
            rhs in prop::array::uniform4(-3i64..=3),
        ) {
            let cols: Vec<[i64; 4]> = raw.iter().map(|(c, _)| *c).collect();
            let lower: Vec<Option<i64>> = raw.iter().map(|(_, d)| match d {
                0 => Some(0),
                1 => Some(1),
                _ => None,
            }).collect();
            let lat = Lattice::new(&cols, lower.clone());
            // Restrict to a box so brute force is exhaustive.
            let r = 4;
            let mut extra = Vec::new();
            for g in 0..cols.len() {
                let mut w = vec![0; cols.len()];
                w[g] = 1;
                extra.push((w.clone(), r));
                w[g] = -1;
                extra.push((w, r));
            }
            let got = lat.solve(rhs, &extra).unwrap();
            prop_assert_eq!(got, brute(&cols, &lower, rhs, r));
            if lat.is_bounded() {
                let all = lat.solve(rhs, &[]).unwrap();
                let inbox: Vec<_> = all.iter().filter(|e| e.iter().all(|x| x.abs() <= r)).cloned().collect();
                prop_assert_eq!(inbox, brute(&cols, &lower, rhs, r));
            }
        }
    }
}
