use crate::algebra::{LogNorm, Poly, PolyMat};
use crate::error::{Error, Result};

use super::LatticeBasis;

/// `T^shift` times the truncation of a basis below `T^-shift`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScaledBasis {
    pub matrix: PolyMat,
    pub shift: i64,
    /// Some entry lost terms or had an uncertain tail.
    pub lossy: bool,
}

pub fn scale_to_poly(basis: &LatticeBasis, shift: i64) -> Result<ScaledBasis> {
    let k = basis.k();
    let f = basis.field();
    let mut matrix = PolyMat::zeros(f, k, k);
    let mut lossy = false;
    for i in 0..k {
        for j in 0..k {
            let (trunc, l) = basis.get(i, j).truncate(shift)?;
            lossy |= l;
            let p = trunc.shift(shift).to_poly().expect("truncation leaves no negative exponents");
            matrix.set(i, j, p);
        }
    }
    Ok(ScaledBasis { matrix, shift, lossy })
}

fn pivot(row: &[Poly]) -> Option<(i64, usize)> {
    let mut best: Option<(i64, usize)> = None;
    for (j, e) in row.iter().enumerate() {
        if let Some(d) = e.deg() {
            let d = d as i64;
            if best.is_none_or(|(bd, _)| d >= bd) {
                best = Some((d, j));
            }
        }
    }
    best
}

/// Row-reduce to weak Popov form: the rightmost max-degree entries of the
/// rows sit in pairwise distinct columns. Returns the form and its row
/// degrees.
pub fn weak_popov(m: &PolyMat) -> Result<(PolyMat, Vec<i64>)> {
    let mut m = m.clone();
    let k = m.rows();
    loop {
        let pivots = (0..k).map(|i| pivot(m.row(i)).ok_or(Error::SingularMatrix)).collect::<Result<Vec<_>>>()?;
        let mut clash = None;
        'search: for a in 0..k {
            for b in a + 1..k {
                if pivots[a].1 == pivots[b].1 {
                    clash = Some((a, b));
                    break 'search;
                }
            }
        }
        let Some((a, b)) = clash else {
            return Ok((m, pivots.iter().map(|p| p.0).collect()));
        };
        let (r, s) = if pivots[b].0 > pivots[a].0 { (b, a) } else { (a, b) };
        let col = pivots[r].1;
        let f = m.field().clone();
        let c = f.mul(m.get(r, col).lead(), f.inv(m.get(s, col).lead())?);
        let d = (pivots[r].0 - pivots[s].0) as usize;
        let src: Vec<Poly> = m.row(s).iter().map(|e| e.scale(c).shift(d)).collect();
        for (dst, e) in m.row_mut(r).iter_mut().zip(&src) {
            *dst = &*dst - e;
        }
    }
}

/// Smallest row degree after reduction: the log-norm of a shortest nonzero
/// vector in the row module of a nonsingular polynomial matrix.
pub fn lambda1_poly(m: &PolyMat) -> Result<i64> {
    let (_, degs) = weak_popov(m)?;
    Ok(*degs.iter().min().expect("nonempty matrix"))
}

/// Log-norm of a shortest nonzero lattice vector.
///
/// The basis is truncated below `T^-guard` and scaled to a polynomial
/// matrix `P`. When truncation lost information the result is certified
/// only if the truncated basis `B'` satisfies `|B'^-1| <= e^guard`, which
/// makes the dropped tail too small to change the norm of any lattice
/// vector; otherwise `GuardTooSmall` is raised.
pub fn lambda1_log(basis: &LatticeBasis, guard: i64) -> Result<i64> {
    let scaled = scale_to_poly(basis, guard)?;
    let (_, degs) = match weak_popov(&scaled.matrix) {
        Err(Error::SingularMatrix) if scaled.lossy => {
            return Err(Error::GuardTooSmall { guard, required: guard + 1 });
        }
        other => other?,
    };
    if scaled.lossy {
        let det_deg: i64 = degs.iter().sum();
        if let LogNorm::Finite(adj) = scaled.matrix.adjugate_max_degree() {
            if adj > det_deg {
                return Err(Error::GuardTooSmall { guard, required: guard + adj - det_deg });
            }
        }
    }
    Ok(degs.iter().min().expect("nonempty basis") - guard)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Field;
    use crate::laurent::Laurent;

    fn pm(f: &Field, rows: &[&[&str]]) -> PolyMat {
        PolyMat::parse(f, rows).unwrap()
    }

    #[test]
    fn scaling_examples() {
        let f = Field::prime(2).unwrap();
        let s = scale_to_poly(&LatticeBasis::identity(&f, 2), 2).unwrap();
        assert_eq!(s.matrix, pm(&f, &[&["T^2", "0"], &["0", "T^2"]]));
        assert!(!s.lossy);
        let s = scale_to_poly(&LatticeBasis::diagonal(&f, &[1, -1]), 1).unwrap();
        assert_eq!(s.matrix, pm(&f, &[&["T^2", "0"], &["0", "1"]]));
        let b = LatticeBasis::parse(&f, "1, T^-1+T^-3 | 0, 1").unwrap();
        let s = scale_to_poly(&b, 2).unwrap();
        assert_eq!(s.matrix.row(0), pm(&f, &[&["T^2", "T"]]).row(0));
        assert!(s.lossy);
        let inexact = LatticeBasis::parse(&f, "1, T^-1 ; prec=3 | 0, 1").unwrap();
        assert!(matches!(scale_to_poly(&inexact, 4), Err(Error::PrecisionExhausted(_))));
    }

    #[test]
    fn weak_popov_examples() {
        let f = Field::prime(2).unwrap();
        let id = PolyMat::identity(&f, 3);
        assert_eq!(weak_popov(&id).unwrap(), (id.clone(), vec![0, 0, 0]));
        let m = pm(&f, &[&["T", "0"], &["1", "1"]]);
        assert_eq!(weak_popov(&m).unwrap(), (m.clone(), vec![1, 0]));
        let m = pm(&f, &[&["T", "1"], &["T", "0"]]);
        assert_eq!(weak_popov(&m).unwrap(), (pm(&f, &[&["0", "1"], &["T", "0"]]), vec![0, 1]));
        let singular = pm(&f, &[&["T", "1"], &["T^2", "T"]]);
        assert_eq!(weak_popov(&singular).unwrap_err(), Error::SingularMatrix);
    }

    #[test]
    fn row_degrees_sum_to_det_degree() {
        let f = Field::prime(3).unwrap();
        let m = pm(&f, &[&["T^3+1", "2*T^2", "T"], &["T^3", "T^2+T", "1"], &["T", "1", "T^4+2"]]);
        let (_, degs) = weak_popov(&m).unwrap();
        assert_eq!(degs.iter().sum::<i64>(), m.det().deg().unwrap() as i64);
    }

    #[test]
    fn small_guard_is_rejected() {
        let f = Field::prime(2).unwrap();
        // basis with a huge inverse: rows (1, T^-1 + T^-9), (1, T^-1)
        let b = LatticeBasis::new(
            &f,
            2,
            ["1", "T^-1+T^-9", "1", "T^-1"].iter().map(|s| Laurent::parse(&f, s).unwrap()).collect(),
        )
        .unwrap();
        assert!(matches!(lambda1_log(&b, 3), Err(Error::GuardTooSmall { .. })));
        assert_eq!(lambda1_log(&b, 12).unwrap(), -9);
    }
}
