//! Dirichlet's theorem for linear forms over F_q((1/T)): a constructive
//! solver through Hankel systems, verifiers for the plain and the
//! epsilon-improved systems, and the improvability checker.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{FqElem, FqMatrix, Field, Poly};
use crate::error::{precision, Error, Result};
use crate::laurent::Laurent;

/// An `m x n` system of linear forms `Y_i(q) = sum_j y_ij q_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearFormsY {
    field: Field,
    m: usize,
    n: usize,
    entries: Vec<Laurent>,
}

impl LinearFormsY {
    pub fn new(field: &Field, m: usize, n: usize, entries: Vec<Laurent>) -> Result<LinearFormsY> {
        if m == 0 || n == 0 || entries.len() != m * n {
            return Err(Error::Domain(format!("need {m}x{n} entries, got {}", entries.len())));
        }
        if entries.iter().any(|e| e.field() != field) {
            return Err(Error::FieldMismatch);
        }
        Ok(LinearFormsY { field: field.clone(), m, n, entries })
    }

    pub fn zero(field: &Field, m: usize, n: usize) -> LinearFormsY {
        LinearFormsY { field: field.clone(), m, n, entries: vec![Laurent::zero(field); m * n] }
    }

    /// Random forms whose entries have top exponents in `-3..=2`, so some
    /// carry a polynomial part. Each entry draws from its own stream seeded
    /// by `(seed, i, j)`: raising `prec` only appends lower coefficients.
    pub fn random(field: &Field, m: usize, n: usize, prec: i64, seed: u64) -> LinearFormsY {
        let entries = (0..m * n)
            .map(|idx| {
                let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ idx as u64);
                let top = rng.gen_range(-3..=2);
                Laurent::random(field, top, prec, &mut rng)
            })
            .collect();
        LinearFormsY { field: field.clone(), m, n, entries }
    }

    /// Rows separated by `|`, entries by `,`; e.g. `T^-1, T^-2 ; prec=20`.
    pub fn parse(field: &Field, s: &str) -> Result<LinearFormsY> {
        let rows: Vec<Vec<Laurent>> = s
            .split('|')
            .map(|row| row.split(',').map(|e| Laurent::parse(field, e)).collect())
            .collect::<Result<_>>()?;
        let m = rows.len();
        let n = rows[0].len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Parse(format!("ragged matrix of forms: {s:?}")));
        }
        LinearFormsY::new(field, m, n, rows.into_iter().flatten().collect())
    }

    pub fn field(&self) -> &Field {
        &self.field
    }
    pub fn m(&self) -> usize {
        self.m
    }
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Laurent {
        &self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[Laurent] {
        &self.entries
    }

    /// Whether every entry has absolute value `< 1`.
    pub fn is_reduced(&self) -> bool {
        self.entries.iter().all(|e| e.top().is_none_or(|t| t < 0))
    }

    /// Common precision: the minimum over the entries, `None` if all exact.
    pub fn prec(&self) -> Option<i64> {
        self.entries.iter().filter_map(Laurent::prec).min()
    }

    pub fn with_prec(&self, p: i64) -> LinearFormsY {
        LinearFormsY { entries: self.entries.iter().map(|e| e.with_prec(p)).collect(), ..self.clone() }
    }

    /// The values `Y_i(q)` for `i = 1..m`.
    pub fn apply(&self, q: &[Poly]) -> Vec<Laurent> {
        assert_eq!(q.len(), self.n);
        let qs: Vec<Laurent> = q.iter().map(Laurent::from_poly).collect();
        (0..self.m)
            .map(|i| {
                (0..self.n)
                    .filter(|&j| !q[j].is_zero())
                    .fold(Laurent::zero(&self.field), |acc, j| &acc + &(self.get(i, j) * &qs[j]))
            })
            .collect()
    }
}

impl fmt::Display for LinearFormsY {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.m {
            if i > 0 {
                f.write_str(" | ")?;
            }
            for j in 0..self.n {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        Ok(())
    }
}

/// A balanced weight vector `(t_1..t_m, t_{m+1}..t_{m+n})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightVector {
    m: usize,
    t: Vec<i64>,
}

impl WeightVector {
    pub fn new(m: usize, t: Vec<i64>) -> Result<WeightVector> {
        if m == 0 || m >= t.len() {
            return Err(Error::Domain(format!("weight vector {t:?} cannot split after {m} entries")));
        }
        if t.iter().any(|&x| x < 0) {
            return Err(Error::Domain(format!("weights must be nonnegative: {t:?}")));
        }
        let (a, b) = t.split_at(m);
        if a.iter().sum::<i64>() != b.iter().sum::<i64>() {
            return Err(Error::Domain(format!("unbalanced weight vector {t:?}")));
        }
        Ok(WeightVector { m, t })
    }

    /// Comma-separated integers, e.g. `2,1,1`.
    pub fn parse(m: usize, s: &str) -> Result<WeightVector> {
        let t = s
            .split(',')
            .map(|x| x.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad weight {x:?}"))))
            .collect::<Result<Vec<_>>>()?;
        WeightVector::new(m, t)
    }

    pub fn m(&self) -> usize {
        self.m
    }
    pub fn n(&self) -> usize {
        self.t.len() - self.m
    }
    pub fn k(&self) -> usize {
        self.t.len()
    }
    pub fn as_slice(&self) -> &[i64] {
        &self.t
    }

    /// Weight `t_i` of form `i` (0-based).
    pub fn row(&self, i: usize) -> i64 {
        self.t[i]
    }

    /// Weight `t_{m+j}` of variable `j` (0-based).
    pub fn col(&self, j: usize) -> i64 {
        self.t[self.m + j]
    }

    /// Max coordinate.
    pub fn norm(&self) -> i64 {
        self.t.iter().copied().max().unwrap_or(0)
    }

    /// The common value of both halves.
    pub fn total(&self) -> i64 {
        self.t[..self.m].iter().sum()
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.t.iter().map(i64::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl Serialize for WeightVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.t.serialize(s)
    }
}

/// `epsilon = e^-s` with `s >= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Epsilon {
    s: i64,
}

impl Epsilon {
    pub fn new(s: i64) -> Result<Epsilon> {
        if s < 1 {
            return Err(Error::Domain(format!("epsilon = e^-{s} must be at most 1/e")));
        }
        Ok(Epsilon { s })
    }

    pub fn parse(text: &str) -> Result<Epsilon> {
        let k = crate::laurent::ball::parse_e_power(text)?;
        Epsilon::new(-k)
    }

    pub fn s(&self) -> i64 {
        self.s
    }

    /// `ln(epsilon) = -s`.
    pub fn log(&self) -> i64 {
        -self.s
    }
}

impl fmt::Display for Epsilon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e^-{}", self.s)
    }
}

/// A nonzero `(p, q)` in `F_q[T]^m x F_q[T]^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirichletSolution {
    pub p: Vec<Poly>,
    pub q: Vec<Poly>,
}

impl DirichletSolution {
    pub fn is_nonzero(&self) -> bool {
        self.p.iter().chain(&self.q).any(|x| !x.is_zero())
    }
}

impl Serialize for DirichletSolution {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let p: Vec<String> = self.p.iter().map(Poly::to_string).collect();
        let q: Vec<String> = self.q.iter().map(Poly::to_string).collect();
        let mut st = s.serialize_struct("DirichletSolution", 2)?;
        st.serialize_field("p", &p)?;
        st.serialize_field("q", &q)?;
        st.end()
    }
}

/// Polynomial parts removed by [`reduce_forms`], indexed like the entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Adjustment {
    pub parts: Vec<Poly>,
}

impl Adjustment {
    pub fn is_empty(&self) -> bool {
        self.parts.iter().all(Poly::is_zero)
    }
}

/// Replace every entry by its fractional part.
pub fn reduce_forms(y: &LinearFormsY) -> Result<(LinearFormsY, Adjustment)> {
    let mut entries = Vec::with_capacity(y.entries.len());
    let mut parts = Vec::with_capacity(y.entries.len());
    for e in &y.entries {
        let (poly, frac) = e.parts()?;
        parts.push(poly);
        entries.push(frac);
    }
    Ok((LinearFormsY { entries, ..y.clone() }, Adjustment { parts }))
}

/// `rows x cols` Hankel matrix whose `(s, c)` entry (1-based) is the
/// coefficient of `T^-(s+c-1)` in `y`.
pub fn hankel_block(y: &Laurent, rows: usize, cols: usize) -> Result<FqMatrix> {
    let f = y.field();
    if y.top().is_some_and(|t| t >= 0) {
        return Err(Error::Domain(format!("hankel block needs |y| < 1, got {y}")));
    }
    let mut out = FqMatrix::zeros(f, rows, cols);
    if rows == 0 || cols == 0 {
        return Ok(out);
    }
    let deepest = (rows + cols - 1) as i64;
    if y.prec().is_some_and(|p| p < deepest) {
        return Err(precision(format!("hankel block {rows}x{cols} needs precision {deepest}")));
    }
    for s in 0..rows {
        for c in 0..cols {
            out.set(s, c, y.coeff(-((s + c + 1) as i64))?);
        }
    }
    Ok(out)
}

fn check_shape(y: &LinearFormsY, t: &WeightVector) -> Result<()> {
    if t.m() != y.m || t.n() != y.n {
        return Err(Error::Domain(format!("weight vector {t} does not fit a {}x{} system", y.m, y.n)));
    }
    Ok(())
}

/// The `(sum t_i) x (sum (t_{m+j}+1))` block matrix whose nullspace holds
/// the coefficient strings of `q`.
pub fn dirichlet_matrix(reduced: &LinearFormsY, t: &WeightVector) -> Result<FqMatrix> {
    let rows: usize = (0..reduced.m).map(|i| t.row(i) as usize).sum();
    let widths: Vec<usize> = (0..reduced.n).map(|j| t.col(j) as usize + 1).collect();
    let cols: usize = widths.iter().sum();
    let mut out = FqMatrix::zeros(reduced.field(), rows, cols);
    let mut r0 = 0;
    for i in 0..reduced.m {
        let h = t.row(i) as usize;
        let mut c0 = 0;
        for (j, &w) in widths.iter().enumerate() {
            let block = hankel_block(reduced.get(i, j), h, w)?;
            for s in 0..h {
                for c in 0..w {
                    out.set(r0 + s, c0 + c, block.get(s, c));
                }
            }
            c0 += w;
        }
        r0 += h;
    }
    Ok(out)
}

fn polypart_of_forms(y: &LinearFormsY, q: &[Poly]) -> Result<Vec<Poly>> {
    y.apply(q).iter().map(|v| v.parts().map(|(p, _)| p)).collect()
}

/// A nonzero solution of `|Y_i q - p_i| < e^-t_i`, `|q_j| <= e^t_{m+j}`.
pub fn dirichlet_solve(y: &LinearFormsY, t: &WeightVector) -> Result<DirichletSolution> {
    check_shape(y, t)?;
    let (reduced, _) = reduce_forms(y)?;
    let matrix = dirichlet_matrix(&reduced, t)?;
    let null = matrix.nullspace();
    let v = null.first().expect("block matrix has more columns than rows");
    let mut q = Vec::with_capacity(y.n);
    let mut c0 = 0;
    for j in 0..y.n {
        let w = t.col(j) as usize + 1;
        q.push(Poly::from_coeffs(y.field(), v[c0..c0 + w].to_vec()));
        c0 += w;
    }
    let p = polypart_of_forms(y, &q)?;
    Ok(DirichletSolution { p, q })
}

/// Check the plain system (`eps = None`) or the improved strict system
/// `|Y_i q - p_i| < eps e^-t_i`, `|q_j| < eps e^t_{m+j}`.
pub fn verify_system(y: &LinearFormsY, t: &WeightVector, sol: &DirichletSolution, eps: Option<Epsilon>) -> Result<bool> {
    check_shape(y, t)?;
    if sol.p.len() != y.m || sol.q.len() != y.n || !sol.is_nonzero() {
        return Ok(false);
    }
    let s = eps.map_or(0, |e| e.s());
    let values = y.apply(&sol.q);
    for (i, v) in values.iter().enumerate() {
        let residual = v - &Laurent::from_poly(&sol.p[i]);
        if !residual.lognorm_le(-t.row(i) - s - 1)? {
            return Ok(false);
        }
    }
    for (j, qj) in sol.q.iter().enumerate() {
        let bound = if eps.is_some() { t.col(j) - s - 1 } else { t.col(j) };
        if qj.deg().is_some_and(|d| d as i64 > bound) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Mixed-radix enumeration of all `q` with `deg q_j < widths[j]`, zero
/// excluded; stops at the first element accepted by `accept`.
pub fn search_q<F>(field: &Field, widths: &[usize], budget: u128, mut accept: F) -> Result<Option<Vec<Poly>>>
where
    F: FnMut(&[Poly]) -> Result<bool>,
{
    let digits: usize = widths.iter().sum();
    let qq = field.q() as u128;
    let needed = qq.checked_pow(digits as u32).unwrap_or(u128::MAX);
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let mut coeffs = vec![0u32; digits];
    for _ in 1..needed {
        for d in coeffs.iter_mut() {
            *d += 1;
            if *d < field.q() {
                break;
            }
            *d = 0;
        }
        let mut q = Vec::with_capacity(widths.len());
        let mut c0 = 0;
        for &w in widths {
            q.push(Poly::from_coeffs(field, coeffs[c0..c0 + w].iter().map(|&c| FqElem(c)).collect()));
            c0 += w;
        }
        if accept(&q)? {
            return Ok(Some(q));
        }
    }
    Ok(None)
}

/// Decide solvability of the improved system for one `t` by exhausting
/// `q`; `p` is forced to be the polynomial part of `Y q`.
pub fn di_check(y: &LinearFormsY, t: &WeightVector, eps: Epsilon, budget: u128) -> Result<Option<DirichletSolution>> {
    check_shape(y, t)?;
    let s = eps.s();
    let widths: Vec<usize> = (0..y.n).map(|j| (t.col(j) - s).max(0) as usize).collect();
    let found = search_q(y.field(), &widths, budget, |q| {
        for (i, v) in y.apply(q).iter().enumerate() {
            if !v.frac()?.lognorm_le(-t.row(i) - s - 1)? {
                return Ok(false);
            }
        }
        Ok(true)
    })?;
    match found {
        None => Ok(None),
        Some(q) => {
            let p = polypart_of_forms(y, &q)?;
            Ok(Some(DirichletSolution { p, q }))
        }
    }
}

/// Verdict of [`di_check`] for one weight vector.
#[derive(Clone, Debug, Serialize)]
pub struct WindowVerdict {
    pub t: WeightVector,
    pub solvable: bool,
    pub witness: Option<DirichletSolution>,
}

/// Per-`t` verdicts; `improvable` holds when every `t` is solvable.
#[derive(Clone, Debug, Serialize)]
pub struct WindowReport {
    pub eps: String,
    pub verdicts: Vec<WindowVerdict>,
    pub improvable: bool,
}

pub fn di_check_window(y: &LinearFormsY, eps: Epsilon, window: &[WeightVector], budget: u128) -> Result<WindowReport> {
    let mut verdicts = Vec::with_capacity(window.len());
    for t in window {
        let witness = di_check(y, t, eps, budget)?;
        if let Some(w) = &witness {
            assert!(w.q.iter().any(|x| !x.is_zero()), "improved witness with q = 0");
        }
        verdicts.push(WindowVerdict { t: t.clone(), solvable: witness.is_some(), witness });
    }
    let improvable = verdicts.iter().all(|v| v.solvable);
    Ok(WindowReport { eps: eps.to_string(), verdicts, improvable })
}

/// All balanced weight vectors with `||t|| <= bound`, in lexicographic order.
pub fn weight_vectors(m: usize, n: usize, bound: i64) -> impl Iterator<Item = WeightVector> {
    let k = m + n;
    let radix = (bound.max(0) + 1) as u64;
    let total = radix.pow(k as u32);
    (0..total).filter_map(move |code| {
        let mut t = vec![0i64; k];
        let mut rest = code;
        for slot in t.iter_mut().rev() {
            *slot = (rest % radix) as i64;
            rest /= radix;
        }
        WeightVector::new(m, t).ok()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> Field {
        Field::prime(2).unwrap()
    }

    fn forms(f: &Field, s: &str) -> LinearFormsY {
        LinearFormsY::parse(f, s).unwrap()
    }

    fn wv(m: usize, s: &str) -> WeightVector {
        WeightVector::parse(m, s).unwrap()
    }

    #[test]
    fn reduce_splits_polynomial_parts() {
        let f = f2();
        let (r, adj) = reduce_forms(&forms(&f, "T+T^-1")).unwrap();
        assert_eq!(r, forms(&f, "T^-1"));
        assert_eq!(adj.parts, vec![Poly::t(&f)]);
        let y = forms(&f, "T^-1, T^-3");
        let (r, adj) = reduce_forms(&y).unwrap();
        assert_eq!(r, y);
        assert!(adj.is_empty());
    }

    #[test]
    fn hankel_examples() {
        let f = f2();
        let h = hankel_block(&Laurent::parse(&f, "T^-1+T^-2").unwrap(), 2, 2).unwrap();
        assert_eq!(h, FqMatrix::from_rows(&f, &[vec![1, 1], vec![1, 0]]));
        let h = hankel_block(&Laurent::parse(&f, "T^-3").unwrap(), 2, 2).unwrap();
        assert_eq!(h, FqMatrix::from_rows(&f, &[vec![0, 0], vec![0, 1]]));
        let h = hankel_block(&Laurent::zero(&f), 2, 3).unwrap();
        assert_eq!(h, FqMatrix::zeros(&f, 2, 3));
        let short = Laurent::parse(&f, "T^-1 ; prec=2").unwrap();
        assert!(matches!(hankel_block(&short, 2, 2), Err(Error::PrecisionExhausted(_))));
    }

    #[test]
    fn solve_rational_point() {
        let f = f2();
        let y = forms(&f, "T^-1");
        let t = wv(1, "1,1");
        let sol = dirichlet_solve(&y, &t).unwrap();
        assert_eq!(sol.p, vec![Poly::one(&f)]);
        assert_eq!(sol.q, vec![Poly::t(&f)]);
        assert!(verify_system(&y, &t, &sol, None).unwrap());
        assert!(!verify_system(&y, &t, &sol, Some(Epsilon::new(1).unwrap())).unwrap());
    }

    #[test]
    fn solve_zero_forms() {
        let f = Field::prime(3).unwrap();
        let y = LinearFormsY::zero(&f, 1, 2);
        for t in weight_vectors(1, 2, 3) {
            let sol = dirichlet_solve(&y, &t).unwrap();
            assert_eq!(sol.q, vec![Poly::one(&f), Poly::zero(&f)]);
            assert!(sol.p.iter().all(Poly::is_zero));
            assert!(verify_system(&y, &t, &sol, None).unwrap());
        }
    }

    #[test]
    fn solve_two_variables() {
        let f = f2();
        let y = forms(&f, "T^-1, T^-2");
        let t = wv(1, "2,1,1");
        let sol = dirichlet_solve(&y, &t).unwrap();
        assert!(verify_system(&y, &t, &sol, None).unwrap());
    }

    #[test]
    fn solve_unreduced_forms() {
        let f = Field::prime(3).unwrap();
        let y = forms(&f, "T^2+2*T^-1+T^-4 ; prec=30 | 2*T+T^-2 ; prec=30");
        for t in weight_vectors(2, 1, 4) {
            let sol = dirichlet_solve(&y, &t).unwrap();
            assert!(verify_system(&y, &t, &sol, None).unwrap(), "t = {t}");
        }
    }

    #[test]
    fn improvability_examples() {
        let f = f2();
        let y = forms(&f, "T^-1");
        let eps = Epsilon::new(1).unwrap();
        assert!(di_check(&y, &wv(1, "1,1"), eps, 1 << 20).unwrap().is_none());
        let w = di_check(&y, &wv(1, "3,3"), eps, 1 << 20).unwrap().unwrap();
        assert_eq!(w.q, vec![Poly::t(&f)]);
        assert_eq!(w.p, vec![Poly::one(&f)]);
        assert!(verify_system(&y, &wv(1, "3,3"), &w, Some(eps)).unwrap());
    }

    #[test]
    fn zero_forms_improvable_once_weights_exceed_s() {
        let f = Field::prime(3).unwrap();
        let y = LinearFormsY::zero(&f, 1, 2);
        let eps = Epsilon::new(2).unwrap();
        let window: Vec<WeightVector> = weight_vectors(1, 2, 5).collect();
        let report = di_check_window(&y, eps, &window, 1 << 20).unwrap();
        for v in &report.verdicts {
            let expect = (0..2).any(|j| v.t.col(j) >= 3);
            assert_eq!(v.solvable, expect, "t = {}", v.t);
        }
        assert!(!report.improvable);
    }

    #[test]
    fn weight_vector_enumeration() {
        let got: Vec<String> = weight_vectors(1, 1, 2).map(|t| t.to_string()).collect();
        assert_eq!(got, ["0,0", "1,1", "2,2"]);
        let mut got: Vec<String> = weight_vectors(1, 2, 1).map(|t| t.to_string()).collect();
        got.sort();
        assert_eq!(got, ["0,0,0", "1,0,1", "1,1,0"]);
        assert_eq!(weight_vectors(2, 2, 0).count(), 1);
    }

    #[test]
    fn parse_formats() {
        assert_eq!(Epsilon::parse("e^-3").unwrap().s(), 3);
        assert!(Epsilon::parse("e^0").is_err());
        assert!(WeightVector::parse(1, "2,1,0").is_err());
        let f = f2();
        let y = forms(&f, "T^-1, T^-2 ; prec=9 | 0, 1");
        assert_eq!((y.m(), y.n()), (2, 2));
        assert_eq!(y.prec(), Some(9));
        assert_eq!(LinearFormsY::parse(&f, &y.to_string()).unwrap(), y);
    }
}
