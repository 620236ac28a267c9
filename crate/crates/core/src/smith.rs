//! Integer canonical-form reduction for subgroups and quotients of finite
//! abelian groups.
//!
//! Everything here works with lattices `L` that contain `e * Z^n` for a known
//! exponent `e`, so entries can always be kept reduced modulo `e`.

use crate::group::{gcd, lcm};

fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i64, 0i64);
    let (mut old_t, mut t) = (0i64, 1i64);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r < 0 {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

#[derive(Clone)]
struct KernelGen {
    coef: Vec<i64>,
    img: Vec<i64>,
}

fn combine(a: i64, x: &KernelGen, b: i64, y: &KernelGen, src: &[u64], dst: &[u64]) -> KernelGen {
    let coef = x
        .coef
        .iter()
        .zip(&y.coef)
        .zip(src)
        .map(|((&p, &q), &m)| (a * p + b * q).rem_euclid(m as i64))
        .collect();
    let img = x
        .img
        .iter()
        .zip(&y.img)
        .zip(dst)
        .map(|((&p, &q), &m)| (a * p + b * q).rem_euclid(m as i64))
        .collect();
    KernelGen { coef, img }
}

/// Generators of the kernel of the homomorphism `⊕ Z_src -> ⊕ Z_dst` sending the
/// `p`-th source generator to `images[p]`.
///
/// The map must be well defined: `src[p] * images[p] ≡ 0` in the target.
/// Rows of the target are processed one at a time; each row is a map into a
/// cyclic group and its kernel is obtained by extended-gcd combination of the
/// current generators, which keeps the generator count from growing.
pub fn kernel(src: &[u64], images: &[Vec<i64>], dst: &[u64]) -> Vec<Vec<i64>> {
    debug_assert_eq!(src.len(), images.len());
    let mut gens: Vec<KernelGen> = (0..src.len())
        .filter(|&p| src[p] > 1)
        .map(|p| {
            let mut coef = vec![0; src.len()];
            coef[p] = 1;
            let img = images[p]
                .iter()
                .zip(dst)
                .map(|(&v, &m)| v.rem_euclid(m as i64))
                .collect();
            KernelGen { coef, img }
        })
        .collect();
    for (r, &m) in dst.iter().enumerate() {
        if m == 1 {
            continue;
        }
        let m = m as i64;
        let mut pivot: Option<KernelGen> = None;
        let mut next = Vec::with_capacity(gens.len());
        for g in gens.drain(..) {
            let v = g.img[r];
            if v == 0 {
                next.push(g);
                continue;
            }
            match pivot.take() {
                None => pivot = Some(g),
                Some(p) => {
                    let pv = p.img[r];
                    let (d, x, y) = ext_gcd(pv, v);
                    let new_pivot = combine(x, &p, y, &g, src, dst);
                    let other = combine(v / d, &p, -(pv / d), &g, src, dst);
                    debug_assert_eq!(other.img[r], 0);
                    pivot = Some(new_pivot);
                    next.push(other);
                }
            }
        }
        if let Some(p) = pivot {
            let pv = p.img[r];
            let t = m / gcd(pv as u64, m as u64) as i64;
            let q = combine(t, &p, 0, &p, src, dst);
            next.push(q);
        }
        next.retain(|g| g.coef.iter().any(|&c| c != 0));
        gens = next;
    }
    gens.into_iter().map(|g| g.coef).collect()
}

/// Result of diagonalizing a lattice `L ⊇ e Z^n`: `P L = ⊕ diag_i Z` with
/// `P` unimodular modulo `e`.
#[derive(Clone, Debug)]
pub struct Diagonal {
    pub diag: Vec<u64>,
    /// Row transform `P`, reduced modulo `e`.
    pub p: Vec<Vec<i64>>,
    /// Inverse transform `P^-1`, reduced modulo `e`. Its columns map the new
    /// coordinates back to the old ones.
    pub p_inv: Vec<Vec<i64>>,
}

fn sym_mod(x: i64, e: i64) -> i64 {
    let r = x.rem_euclid(e);
    if r > e / 2 {
        r - e
    } else {
        r
    }
}

/// Diagonalizes the lattice spanned by `cols` (vectors of length `n`) together
/// with `e Z^n`. The diagonal is not normalized to divisibility order.
pub fn diagonalize(n: usize, cols: &[Vec<i64>], e: u64) -> Diagonal {
    let e = e as i64;
    let c = cols.len();
    let mut a: Vec<Vec<i64>> = (0..n)
        .map(|i| cols.iter().map(|col| sym_mod(col[i], e)).collect())
        .collect();
    let mut p: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    let mut p_inv = p.clone();
    let mut diag = vec![e as u64; n];

    for t in 0..n {
        loop {
            for row in a.iter_mut().skip(t) {
                for x in row.iter_mut().skip(t) {
                    *x = sym_mod(*x, e);
                }
            }
            let mut best: Option<(usize, usize)> = None;
            for (i, row) in a.iter().enumerate().skip(t) {
                for (j, &x) in row.iter().enumerate().skip(t) {
                    if x != 0 && best.is_none_or(|(bi, bj)| x.abs() < a[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                diag[t] = e as u64;
                break;
            };
            if pi != t {
                a.swap(pi, t);
                p.swap(pi, t);
                for row in p_inv.iter_mut() {
                    row.swap(pi, t);
                }
            }
            if pj != t {
                for row in a.iter_mut() {
                    row.swap(pj, t);
                }
            }
            let piv = a[t][t];
            let mut clean = true;
            for i in t + 1..n {
                let q = a[i][t] / piv;
                if q != 0 {
                    for j in t..c {
                        a[i][j] -= q * a[t][j];
                    }
                    for j in 0..n {
                        p[i][j] = (p[i][j] - q * p[t][j]).rem_euclid(e);
                    }
                    for row in p_inv.iter_mut() {
                        row[t] = (row[t] + q * row[i]).rem_euclid(e);
                    }
                }
                if a[i][t] != 0 {
                    clean = false;
                }
            }
            for j in t + 1..c {
                let q = a[t][j] / piv;
                if q != 0 {
                    for row in a.iter_mut().skip(t) {
                        row[j] -= q * row[t];
                    }
                }
                if a[t][j] != 0 {
                    clean = false;
                }
            }
            if clean {
                diag[t] = gcd(piv.unsigned_abs(), e as u64);
                break;
            }
        }
    }
    Diagonal { diag, p, p_inv }
}

/// Cyclic decomposition of the subgroup of `⊕ Z_orders` generated by `gens`:
/// returns `(generator, order)` pairs with every order > 1 and the subgroup
/// equal to the internal direct sum of the cyclic groups they generate.
pub fn subgroup_decomposition(orders: &[u64], gens: &[Vec<i64>]) -> Vec<(Vec<i64>, u64)> {
    if gens.is_empty() {
        return Vec::new();
    }
    let e = orders.iter().fold(1, |acc, &d| lcm(acc, d));
    if e == 1 {
        return Vec::new();
    }
    let g = gens.len();
    let rel = kernel(&vec![e; g], gens, orders);
    let d = diagonalize(g, &rel, e);
    let mut out = Vec::new();
    for i in 0..g {
        if d.diag[i] <= 1 {
            continue;
        }
        let elem: Vec<i64> = (0..orders.len())
            .map(|k| {
                let s: i64 = (0..g).map(|j| d.p_inv[j][i] * gens[j][k]).sum();
                s.rem_euclid(orders[k] as i64)
            })
            .collect();
        out.push((elem, d.diag[i]));
    }
    out
}

/// Presentation of a quotient `(⊕ Z_orders) / H` as a product of cyclic groups.
#[derive(Clone, Debug)]
pub struct QuotientMap {
    pub orders: Vec<u64>,
    /// Representative in the original group of each quotient generator.
    pub reps: Vec<Vec<i64>>,
    /// Row `i` gives quotient coordinate `i` as a linear form in the original coordinates.
    pub proj: Vec<Vec<i64>>,
}

impl QuotientMap {
    pub fn project(&self, x: &[u64]) -> Vec<u64> {
        self.proj
            .iter()
            .zip(&self.orders)
            .map(|(row, &q)| {
                let s: i64 = row.iter().zip(x).map(|(&r, &v)| r * v as i64).sum();
                s.rem_euclid(q as i64) as u64
            })
            .collect()
    }
}

pub fn quotient(orders: &[u64], sub_gens: &[Vec<i64>]) -> QuotientMap {
    let n = orders.len();
    let e = orders.iter().fold(1, |acc, &d| lcm(acc, d));
    if e == 1 {
        return QuotientMap {
            orders: Vec::new(),
            reps: Vec::new(),
            proj: Vec::new(),
        };
    }
    let mut cols: Vec<Vec<i64>> = sub_gens.to_vec();
    for (j, &d) in orders.iter().enumerate() {
        let mut v = vec![0; n];
        v[j] = d as i64;
        cols.push(v);
    }
    let dg = diagonalize(n, &cols, e);
    let mut out = QuotientMap {
        orders: Vec::new(),
        reps: Vec::new(),
        proj: Vec::new(),
    };
    for i in 0..n {
        if dg.diag[i] <= 1 {
            continue;
        }
        out.orders.push(dg.diag[i]);
        out.reps
            .push((0..n).map(|k| dg.p_inv[k][i].rem_euclid(orders[k] as i64)).collect());
        out.proj.push(dg.p[i].clone());
    }
    out
}

/// Elementary divisors (prime powers) of `⊕ Z_orders`, sorted.
pub fn elementary_divisors(orders: &[u64]) -> Vec<u64> {
    let mut out = Vec::new();
    for &d in orders {
        let mut n = d;
        let mut p = 2;
        while n > 1 {
            if p * p > n {
                out.push(n);
                break;
            }
            if n % p == 0 {
                let mut q = 1;
                while n % p == 0 {
                    n /= p;
                    q *= p;
                }
                out.push(q);
            }
            p += 1;
        }
    }
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteAbelianGroup;
    use std::collections::BTreeSet;

    fn enumerate_span(orders: &[u64], gens: &[(Vec<i64>, u64)]) -> BTreeSet<Vec<i64>> {
        let mut out = BTreeSet::new();
        let total: u64 = gens.iter().map(|g| g.1).product();
        for mut idx in 0..total {
            let mut v = vec![0i64; orders.len()];
            for (g, o) in gens {
                let c = (idx % o) as i64;
                idx /= o;
                for k in 0..orders.len() {
                    v[k] = (v[k] + c * g[k]).rem_euclid(orders[k] as i64);
                }
            }
            out.insert(v);
        }
        out
    }

    #[test]
    fn kernel_of_doubling_on_z4() {
        let k = kernel(&[4], &[vec![2]], &[4]);
        let g = FiniteAbelianGroup::new(vec![4]).unwrap();
        let span = g.span(k.iter().map(|v| g.index_signed(v)));
        assert_eq!(span.to_vec(), vec![0, 2]);
    }

    #[test]
    fn decomposition_is_direct_and_complete() {
        let orders = [4u64, 6, 2];
        let gens = vec![vec![2, 3, 1], vec![1, 2, 0], vec![0, 3, 1]];
        let dec = subgroup_decomposition(&orders, &gens);
        let g = FiniteAbelianGroup::new(orders.to_vec()).unwrap();
        let span = g.span(gens.iter().map(|v| g.index_signed(v)));
        let size: u64 = dec.iter().map(|d| d.1).product();
        assert_eq!(size as usize, span.len());
        assert_eq!(enumerate_span(&orders, &dec).len(), span.len());
    }

    #[test]
    fn quotient_of_z4_by_2z4() {
        let q = quotient(&[4], &[vec![2]]);
        assert_eq!(q.orders, vec![2]);
        assert_eq!(q.project(&[1]), vec![1]);
        assert_eq!(q.project(&[2]), vec![0]);
    }

    #[test]
    fn elementary_divisors_split_primes() {
        assert_eq!(elementary_divisors(&[12, 2]), vec![2, 3, 4]);
    }
}
