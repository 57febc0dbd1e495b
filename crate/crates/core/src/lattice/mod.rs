//! Lattices `B Λ^k` in F^k given by row bases, the unipotent embedding of a
//! system of linear forms, the diagonal flow, and shortest vectors.

pub mod oracle;
pub mod reduce;

use std::fmt;

use serde::Serialize;

use crate::algebra::{Field, LogNorm};
use crate::dirichlet::{reduce_forms, Epsilon, LinearFormsY, WeightVector};
use crate::error::{Error, Result};
use crate::laurent::Laurent;

pub use reduce::{lambda1_log, lambda1_poly, scale_to_poly, weak_popov, ScaledBasis};

/// A `k x k` basis over F whose rows span the lattice over F_q[T].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeBasis {
    field: Field,
    k: usize,
    entries: Vec<Laurent>,
}

impl LatticeBasis {
    pub fn new(field: &Field, k: usize, entries: Vec<Laurent>) -> Result<LatticeBasis> {
        if entries.len() != k * k {
            return Err(Error::Domain(format!("need {} entries for a {k}x{k} basis", k * k)));
        }
        if entries.iter().any(|e| e.field() != field) {
            return Err(Error::FieldMismatch);
        }
        Ok(LatticeBasis { field: field.clone(), k, entries })
    }

    pub fn identity(field: &Field, k: usize) -> LatticeBasis {
        LatticeBasis::diagonal(field, &vec![0; k])
    }

    /// `diag(T^e_1, ..., T^e_k)`.
    pub fn diagonal(field: &Field, exps: &[i64]) -> LatticeBasis {
        let k = exps.len();
        let mut entries = vec![Laurent::zero(field); k * k];
        for (i, &e) in exps.iter().enumerate() {
            entries[i * k + i] = Laurent::monomial(field, field.one(), e);
        }
        LatticeBasis { field: field.clone(), k, entries }
    }

    /// Rows separated by `|`, entries by `,`.
    pub fn parse(field: &Field, s: &str) -> Result<LatticeBasis> {
        let rows: Vec<Vec<Laurent>> = s
            .split('|')
            .map(|row| row.split(',').map(|e| Laurent::parse(field, e)).collect())
            .collect::<Result<_>>()?;
        let k = rows.len();
        if rows.iter().any(|r| r.len() != k) {
            return Err(Error::Parse(format!("basis must be square: {s:?}")));
        }
        LatticeBasis::new(field, k, rows.into_iter().flatten().collect())
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn get(&self, i: usize, j: usize) -> &Laurent {
        &self.entries[i * self.k + j]
    }

    pub fn row(&self, i: usize) -> &[Laurent] {
        &self.entries[i * self.k..(i + 1) * self.k]
    }

    /// Minimum precision over the entries; `None` if all are exact.
    pub fn prec(&self) -> Option<i64> {
        self.entries.iter().filter_map(Laurent::prec).min()
    }

    pub fn with_prec(&self, p: i64) -> LatticeBasis {
        LatticeBasis { entries: self.entries.iter().map(|e| e.with_prec(p)).collect(), ..self.clone() }
    }

    pub fn mul(&self, other: &LatticeBasis) -> LatticeBasis {
        assert_eq!(self.k, other.k);
        let k = self.k;
        let mut entries = Vec::with_capacity(k * k);
        for i in 0..k {
            for j in 0..k {
                let mut acc = Laurent::zero(&self.field);
                for l in 0..k {
                    if !self.get(i, l).is_exact_zero() && !other.get(l, j).is_exact_zero() {
                        acc = &acc + &(self.get(i, l) * other.get(l, j));
                    }
                }
                entries.push(acc);
            }
        }
        LatticeBasis { field: self.field.clone(), k, entries }
    }

    /// The lattice vector `sum_i v_i row_i`.
    pub fn combine(&self, v: &[crate::algebra::Poly]) -> Vec<Laurent> {
        assert_eq!(v.len(), self.k);
        (0..self.k)
            .map(|j| {
                (0..self.k)
                    .filter(|&i| !v[i].is_zero())
                    .fold(Laurent::zero(&self.field), |acc, i| &acc + &self.get(i, j).mul_poly(&v[i]))
            })
            .collect()
    }
}

impl fmt::Display for LatticeBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.k {
            if i > 0 {
                f.write_str(" | ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(Laurent::to_string).collect();
            f.write_str(&row.join(", "))?;
        }
        Ok(())
    }
}

/// Row basis of `{(Y q - p, q)}`: rows `e_i` for the forms, then for each
/// variable `j` the row `(y_1j, ..., y_mj, e_{m+j})`.
pub fn tau(y: &LinearFormsY) -> LatticeBasis {
    let (m, n) = (y.m(), y.n());
    let k = m + n;
    let f = y.field();
    let mut entries = vec![Laurent::zero(f); k * k];
    for i in 0..m {
        entries[i * k + i] = Laurent::one(f);
    }
    for j in 0..n {
        for i in 0..m {
            entries[(m + j) * k + i] = y.get(i, j).clone();
        }
        entries[(m + j) * k + m + j] = Laurent::one(f);
    }
    LatticeBasis { field: f.clone(), k, entries }
}

/// The diagonal flow: `T^t_i` on form coordinates, `T^-t_{m+j}` on the rest.
pub fn flow_matrix(field: &Field, t: &WeightVector) -> LatticeBasis {
    let exps: Vec<i64> = (0..t.k()).map(|c| if c < t.m() { t.row(c) } else { -t.col(c - t.m()) }).collect();
    LatticeBasis::diagonal(field, &exps)
}

/// The flowed lattice of a system of forms, built from its fractional parts
/// (the lattice is unchanged and the basis has small inverse).
pub fn flow_tau(y: &LinearFormsY, t: &WeightVector) -> Result<LatticeBasis> {
    if t.m() != y.m() || t.n() != y.n() {
        return Err(Error::Domain(format!("weight vector {t} does not fit a {}x{} system", y.m(), y.n())));
    }
    let (reduced, _) = reduce_forms(y)?;
    Ok(tau(&reduced).mul(&flow_matrix(y.field(), t)))
}

/// Default truncation guard for flowed lattices.
pub fn default_guard(t: &WeightVector) -> i64 {
    t.norm() + 8
}

/// `lambda_1 >= eps`, i.e. every nonzero vector has norm at least `eps`.
pub fn in_k_eps(basis: &LatticeBasis, eps: Epsilon, guard: i64) -> Result<bool> {
    Ok(lambda1_log(basis, guard)? >= eps.log())
}

/// One record of a flow trace.
#[derive(Clone, Debug, Serialize)]
pub struct TracePoint {
    pub t: WeightVector,
    pub lambda1_log: i64,
    pub in_k_eps: bool,
}

impl TracePoint {
    /// `t;lambda1_log;in_K_eps`.
    pub fn csv_row(&self) -> String {
        format!("{};{};{}", self.t, self.lambda1_log, self.in_k_eps)
    }
}

pub fn flow_trace(y: &LinearFormsY, ts: &[WeightVector], eps: Epsilon) -> Result<Vec<TracePoint>> {
    ts.iter()
        .map(|t| {
            let basis = flow_tau(y, t)?;
            let l = lambda1_log(&basis, default_guard(t))?;
            Ok(TracePoint { t: t.clone(), lambda1_log: l, in_k_eps: l >= eps.log() })
        })
        .collect()
}

/// Log-norm of the determinant of an exact basis.
pub fn det_lognorm(basis: &LatticeBasis) -> Result<LogNorm> {
    if basis.prec().is_some() {
        return Err(Error::Domain("determinant check needs an exact basis".into()));
    }
    let low = basis.entries.iter().filter_map(Laurent::low_exponent).min().unwrap_or(0).min(0);
    let scaled = scale_to_poly(basis, -low)?;
    Ok(scaled.matrix.det().lognorm().shift(low * basis.k as i64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Poly;

    fn f2() -> Field {
        Field::prime(2).unwrap()
    }

    #[test]
    fn tau_of_zero_is_identity() {
        let f = Field::prime(3).unwrap();
        assert_eq!(tau(&LinearFormsY::zero(&f, 2, 1)), LatticeBasis::identity(&f, 3));
    }

    #[test]
    fn tau_contains_form_residuals() {
        let f = f2();
        let y = LinearFormsY::parse(&f, "T^-1").unwrap();
        let b = tau(&y);
        assert_eq!(b, LatticeBasis::parse(&f, "1, 0 | T^-1, 1").unwrap());
        let v = b.combine(&[Poly::zero(&f), Poly::t(&f)]);
        assert_eq!(v, vec![Laurent::one(&f), Laurent::from_poly(&Poly::t(&f))]);
    }

    #[test]
    fn flow_examples() {
        let f = f2();
        let t = WeightVector::parse(1, "1,1").unwrap();
        assert_eq!(flow_matrix(&f, &t), LatticeBasis::diagonal(&f, &[1, -1]));
        let t0 = WeightVector::parse(1, "0,0").unwrap();
        assert_eq!(flow_matrix(&f, &t0), LatticeBasis::identity(&f, 2));
    }

    #[test]
    fn flowed_lattices_are_unimodular() {
        let f = Field::prime(3).unwrap();
        let y = LinearFormsY::parse(&f, "T^-1+2*T^-3, T+T^-2 | 2*T^-2, T^-1").unwrap();
        for t in crate::dirichlet::weight_vectors(2, 2, 3) {
            let b = tau(&y).mul(&flow_matrix(&f, &t));
            assert_eq!(det_lognorm(&b).unwrap(), LogNorm::Finite(0), "t = {t}");
        }
    }

    #[test]
    fn lambda1_examples() {
        let f = f2();
        assert_eq!(lambda1_log(&LatticeBasis::identity(&f, 3), 4).unwrap(), 0);
        assert_eq!(lambda1_log(&LatticeBasis::diagonal(&f, &[1, -1]), 4).unwrap(), -1);
        let y = LinearFormsY::zero(&f, 1, 1);
        let t = WeightVector::parse(1, "2,2").unwrap();
        assert_eq!(lambda1_log(&flow_tau(&y, &t).unwrap(), default_guard(&t)).unwrap(), -2);
    }

    #[test]
    fn membership_in_k_eps() {
        let f = f2();
        let e1 = Epsilon::new(1).unwrap();
        assert!(in_k_eps(&LatticeBasis::identity(&f, 2), e1, 4).unwrap());
        assert!(in_k_eps(&LatticeBasis::diagonal(&f, &[1, -1]), e1, 4).unwrap());
        assert!(!in_k_eps(&LatticeBasis::diagonal(&f, &[2, -2]), e1, 4).unwrap());
    }

    #[test]
    fn trace_of_zero_forms() {
        let f = f2();
        let y = LinearFormsY::zero(&f, 1, 1);
        let ts: Vec<WeightVector> = ["1,1", "2,2"].iter().map(|s| WeightVector::parse(1, s).unwrap()).collect();
        let trace = flow_trace(&y, &ts, Epsilon::new(1).unwrap()).unwrap();
        let rows: Vec<String> = trace.iter().map(TracePoint::csv_row).collect();
        assert_eq!(rows, ["1,1;-1;true", "2,2;-2;false"]);
        assert!(flow_trace(&y, &[], Epsilon::new(1).unwrap()).unwrap().is_empty());
    }
}
