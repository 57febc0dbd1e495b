//! Reference shortest-vector computations that do not use row reduction.

use crate::algebra::{FqElem, FqMatrix, LogNorm, Poly, PolyMat};
use crate::dirichlet::search_q;
use crate::error::{Error, Result};

use super::LatticeBasis;

/// Minimum of `max_j deg (v P)_j` over all nonzero `v` with
/// `deg v_i <= max_deg`, by enumeration.
pub fn lambda1_enumerate(m: &PolyMat, max_deg: usize, budget: u128) -> Result<i64> {
    let widths = vec![max_deg + 1; m.rows()];
    let mut best = LogNorm::Bottom;
    search_q(m.field(), &widths, budget, |v| {
        let d = m.vec_mul(v).iter().map(Poly::lognorm).max().unwrap_or(LogNorm::Bottom);
        if d != LogNorm::Bottom && (best == LogNorm::Bottom || d < best) {
            best = d;
        }
        Ok(false)
    })?;
    best.finite().ok_or(Error::SingularMatrix)
}

/// Exact shortest-vector degree of a nonsingular polynomial matrix by
/// linear algebra over F_q.
///
/// If `w = v P` has degree `<= delta` then `v = w adj(P) / det P`, so
/// `deg v_i <= delta + sum_{l != i} rowdeg_l - deg det P`. For each
/// candidate `delta` this turns "some nonzero `v` reaches degree `delta`"
/// into a nullspace question about the coefficients of `v`.
pub fn lambda1_linear(m: &PolyMat) -> Result<i64> {
    let k = m.rows();
    let f = m.field();
    let det_deg = m.det().deg().ok_or(Error::SingularMatrix)? as i64;
    let rowdeg: Vec<i64> = (0..k).map(|i| m.row_degree(i).finite().ok_or(Error::SingularMatrix)).collect::<Result<_>>()?;
    let total: i64 = rowdeg.iter().sum();
    let upper = *rowdeg.iter().min().unwrap();
    for delta in 0..upper {
        let bounds: Vec<i64> = (0..k).map(|i| delta + total - rowdeg[i] - det_deg).collect();
        let offsets: Vec<usize> = bounds
            .iter()
            .scan(0usize, |acc, &b| {
                let o = *acc;
                *acc += (b + 1).max(0) as usize;
                Some(o)
            })
            .collect();
        let unknowns: usize = bounds.iter().map(|&b| (b + 1).max(0) as usize).sum();
        if unknowns == 0 {
            continue;
        }
        let top = (0..k).map(|i| bounds[i] + rowdeg[i]).max().unwrap();
        let eq_per_col = (top - delta).max(0) as usize;
        let mut sys = FqMatrix::zeros(f, eq_per_col * k, unknowns);
        for j in 0..k {
            for (e, deg) in (delta + 1..=top).enumerate() {
                let row = j * eq_per_col + e;
                for i in 0..k {
                    for c in 0..=bounds[i] {
                        let pd = deg - c;
                        if pd >= 0 {
                            let v = m.get(i, j).coeff(pd as usize);
                            if !v.is_zero() {
                                sys.set(row, offsets[i] + c as usize, v);
                            }
                        }
                    }
                }
            }
        }
        if sys.nullspace().first().is_some_and(|v| v.iter().any(|x| *x != FqElem::ZERO)) {
            return Ok(delta);
        }
    }
    Ok(upper)
}

/// Shortest vector of an exact basis over F by enumerating integer
/// combinations with `deg v_i <= max_deg`.
pub fn lambda1_enumerate_basis(basis: &LatticeBasis, max_deg: usize, budget: u128) -> Result<i64> {
    let widths = vec![max_deg + 1; basis.k()];
    let mut best: Option<i64> = None;
    search_q(basis.field(), &widths, budget, |v| {
        let mut d = LogNorm::Bottom;
        for x in basis.combine(v) {
            d = d.max(x.lognorm()?);
        }
        if let LogNorm::Finite(d) = d {
            best = Some(best.map_or(d, |b| b.min(d)));
        }
        Ok(false)
    })?;
    best.ok_or(Error::SingularMatrix)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Field;
    use crate::dirichlet::{LinearFormsY, WeightVector};
    use crate::lattice::{default_guard, flow_tau, lambda1_log, lambda1_poly};
    use rand::SeedableRng;

    #[test]
    fn oracles_agree_on_small_matrices() {
        let f = Field::prime(2).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let mut checked = 0;
        while checked < 40 {
            let rows: Vec<Vec<Poly>> = (0..2).map(|_| (0..2).map(|_| Poly::random(&f, 2, &mut rng)).collect()).collect();
            let m = PolyMat::from_rows(&f, rows);
            if m.det().is_zero() {
                continue;
            }
            let lin = lambda1_linear(&m).unwrap();
            assert_eq!(lin, lambda1_enumerate(&m, 4, 1 << 20).unwrap(), "{m:?}");
            assert_eq!(lin, lambda1_poly(&m).unwrap(), "{m:?}");
            checked += 1;
        }
    }

    #[test]
    fn rational_point_trace_matches_enumeration() {
        let f = Field::prime(2).unwrap();
        let y = LinearFormsY::parse(&f, "T^-1").unwrap();
        let t = WeightVector::parse(1, "1,1").unwrap();
        let b = flow_tau(&y, &t).unwrap();
        assert_eq!(lambda1_log(&b, default_guard(&t)).unwrap(), lambda1_enumerate_basis(&b, 2, 1 << 20).unwrap());
    }
}
