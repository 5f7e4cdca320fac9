//! Tile-recursive PLUQ with rotations, revealing the rank profile matrix.
//!
//! The matrix is split into four tiles. The top-left tile is factored
//! first; its factors are used to eliminate the top-right and bottom-left
//! tiles, exposing three residual blocks F (top-right), G (bottom-left) and
//! a doubly-updated bottom-right block, which are factored recursively.
//! The four partial factorizations are then merged: pivots are ordered
//! (top-left, F, G, bottom-right) and the non-pivot rows and columns of the
//! two halves are appended in their original relative order, which is what
//! keeps the accumulated permutations rotation-shaped and the pivoting
//! matrix equal to R_A.

use crate::error::Result;
use crate::field::ReductionCounter;
use crate::matrix::DenseMatrix;
use crate::perm::{Permutation, Side};

use super::crout::{crout_inner, RawFactors};
use super::{PluqFactors, Strategy};

/// PLUQ by tile recursion; blocks with min dimension at most `threshold`
/// (raised to at least 1) are factored by the Crout base case.
pub fn pluq_tile_recursive(a: &DenseMatrix, threshold: usize) -> Result<PluqFactors> {
    let threshold = threshold.max(1);
    let mut ctr = ReductionCounter::new();
    let raw = tile(a, threshold, &mut ctr)?;
    Ok(PluqFactors::new(
        raw.p,
        raw.q,
        raw.l,
        raw.u,
        raw.r,
        Strategy::TileRecursive { threshold },
        ctr,
    ))
}

/// Where a merged row position comes from: the top half (a position in the
/// top-left factorization, plus its F position if it reached the residual)
/// or the bottom half (a position in the G factorization, plus its position
/// in the final block's factorization if it reached that far).
#[derive(Clone, Copy)]
enum RowSrc {
    Top { a1pos: usize, fpos: Option<usize> },
    Bottom { gpos: usize, zpos: Option<usize> },
}

#[derive(Clone, Copy)]
enum ColSrc {
    A1 { pos: usize },
    FCol { fpos: usize, zpos: Option<usize> },
    GCol { gpos: usize },
}

fn tile(a: &DenseMatrix, threshold: usize, ctr: &mut ReductionCounter) -> Result<RawFactors> {
    let (m, n) = (a.rows(), a.cols());
    if m.min(n) <= threshold {
        return crout_inner(a, ctr);
    }
    let f = a.field();
    let m1 = m.div_ceil(2);
    let n1 = n.div_ceil(2);

    // A = [A1 A2; A3 A4], recurse on A1.
    let a1 = a.block(1, m1, 1, n1);
    let a2 = a.block(1, m1, n1 + 1, n);
    let a3 = a.block(m1 + 1, m, 1, n1);
    let a4 = a.block(m1 + 1, m, n1 + 1, n);
    let f1 = tile(&a1, threshold, ctr)?;
    let r1 = f1.r;

    let l1 = f1.l.block(1, r1, 1, r1);
    let m1mat = f1.l.block(r1 + 1, m1, 1, r1);
    let u1 = f1.u.block(1, r1, 1, r1);
    let v1 = f1.u.block(1, r1, r1 + 1, n1);

    // Eliminate A2 and A3 against the A1 pivots.
    let b = f1.p.apply(&a2, Side::Rows, true)?;
    let b1 = b.block(1, r1, 1, b.cols());
    let b2 = b.block(r1 + 1, m1, 1, b.cols());
    let c = f1.q.apply(&a3, Side::Cols, true)?;
    let c1 = c.block(1, c.rows(), 1, r1);
    let c2 = c.block(1, c.rows(), r1 + 1, n1);

    let d = solve_unit_lower(&l1, &b1, ctr)?; // r1 x (n - n1)
    let e = solve_upper_right(&c1, &u1, ctr)?; // (m - m1) x r1
    let fres = mat_sub(&b2, &mat_mul(&m1mat, &d, ctr)?, ctr)?;
    let g = mat_sub(&c2, &mat_mul(&e, &v1, ctr)?, ctr)?;
    let h = mat_sub(&a4, &mat_mul(&e, &d, ctr)?, ctr)?;

    let f2 = tile(&fres, threshold, ctr)?;
    let r2 = f2.r;
    let f3 = tile(&g, threshold, ctr)?;
    let r3 = f3.r;

    let u2 = f2.u.block(1, r2, 1, r2);
    let v2 = f2.u.block(1, r2, r2 + 1, f2.u.cols());
    let l3 = f3.l.block(1, r3, 1, r3);
    let m3 = f3.l.block(r3 + 1, f3.l.rows(), 1, r3);

    // Eliminate the doubly-updated bottom-right block against the F and G
    // pivots, then recurse on what is left.
    let hp = f3
        .p
        .apply(&f2.q.apply(&h, Side::Cols, true)?, Side::Rows, true)?;
    let h11 = hp.block(1, r3, 1, r2);
    let h12 = hp.block(1, r3, r2 + 1, hp.cols());
    let h21 = hp.block(r3 + 1, hp.rows(), 1, r2);
    let h22 = hp.block(r3 + 1, hp.rows(), r2 + 1, hp.cols());
    let k1 = solve_upper_right(&h11, &u2, ctr)?;
    let k2 = solve_upper_right(&h21, &u2, ctr)?;
    let o = solve_unit_lower(&l3, &mat_sub(&h12, &mat_mul(&k1, &v2, ctr)?, ctr)?, ctr)?;
    let z = mat_sub(
        &mat_sub(&h22, &mat_mul(&k2, &v2, ctr)?, ctr)?,
        &mat_mul(&m3, &o, ctr)?,
        ctr,
    )?;
    let f4 = tile(&z, threshold, ctr)?;
    let r4 = f4.r;

    let kfull = vstack(&k1, &k2)?; // rows indexed like G positions
    let r = r1 + r2 + r3 + r4;
    let t1 = m1 - r1; // F rows
    let t2 = m - m1; // G / H rows
    let c2n = n - n1; // F / H cols
    let c1g = n1 - r1; // G cols

    // Merged positions: pivots of A1, F, G, Z, then the remaining rows of
    // the top half followed by the remaining rows of the bottom half (and
    // symmetrically for columns).
    let mut rows: Vec<RowSrc> = Vec::with_capacity(m);
    for t in 1..=r1 {
        rows.push(RowSrc::Top { a1pos: t, fpos: None });
    }
    for t in 1..=r2 {
        rows.push(RowSrc::Top {
            a1pos: r1 + f2.p.image(t),
            fpos: Some(t),
        });
    }
    for s in 1..=r3 {
        rows.push(RowSrc::Bottom { gpos: s, zpos: None });
    }
    for z in 1..=r4 {
        rows.push(RowSrc::Bottom {
            gpos: r3 + f4.p.image(z),
            zpos: Some(z),
        });
    }
    for w in 1..=t1 - r2 {
        rows.push(RowSrc::Top {
            a1pos: r1 + f2.p.image(r2 + w),
            fpos: Some(r2 + w),
        });
    }
    for w in 1..=t2 - r3 - r4 {
        rows.push(RowSrc::Bottom {
            gpos: r3 + f4.p.image(r4 + w),
            zpos: Some(r4 + w),
        });
    }

    let mut cols: Vec<ColSrc> = Vec::with_capacity(n);
    for u in 1..=r1 {
        cols.push(ColSrc::A1 { pos: u });
    }
    for t in 1..=r2 {
        cols.push(ColSrc::FCol { fpos: t, zpos: None });
    }
    for s in 1..=r3 {
        cols.push(ColSrc::GCol { gpos: s });
    }
    for z in 1..=r4 {
        cols.push(ColSrc::FCol {
            fpos: r2 + f4.q.image(z),
            zpos: Some(z),
        });
    }
    for w in 1..=c1g - r3 {
        cols.push(ColSrc::GCol { gpos: r3 + w });
    }
    for w in 1..=c2n - r2 - r4 {
        cols.push(ColSrc::FCol {
            fpos: r2 + f4.q.image(r4 + w),
            zpos: Some(r4 + w),
        });
    }

    let p_images = rows
        .iter()
        .map(|rs| match *rs {
            RowSrc::Top { a1pos, .. } => f1.p.image(a1pos),
            RowSrc::Bottom { gpos, .. } => m1 + f3.p.image(gpos),
        })
        .collect();
    let q_images = cols
        .iter()
        .map(|cs| match *cs {
            ColSrc::A1 { pos } => f1.q.image(pos),
            ColSrc::FCol { fpos, .. } => n1 + f2.q.image(fpos),
            ColSrc::GCol { gpos } => f1.q.image(r1 + f3.q.image(gpos)),
        })
        .collect();
    let p = Permutation::from_images(p_images)?;
    let q = Permutation::from_images(q_images)?;

    let mut l = DenseMatrix::zero(m, r, f);
    for (gi, rs) in rows.iter().enumerate() {
        let g = gi + 1;
        match *rs {
            RowSrc::Top { a1pos, fpos } => {
                for t in 1..=r1 {
                    l.set(g, t, f1.l.get(a1pos, t));
                }
                if let Some(fp) = fpos {
                    for t in 1..=r2 {
                        l.set(g, r1 + t, f2.l.get(fp, t));
                    }
                }
            }
            RowSrc::Bottom { gpos, zpos } => {
                let hrow = f3.p.image(gpos);
                for t in 1..=r1 {
                    l.set(g, t, e.get(hrow, t));
                }
                for t in 1..=r2 {
                    l.set(g, r1 + t, kfull.get(gpos, t));
                }
                for s in 1..=r3 {
                    l.set(g, r1 + r2 + s, f3.l.get(gpos, s));
                }
                if let Some(zp) = zpos {
                    for z in 1..=r4 {
                        l.set(g, r1 + r2 + r3 + z, f4.l.get(zp, z));
                    }
                }
            }
        }
    }

    let mut u = DenseMatrix::zero(r, n, f);
    for (hj, cs) in cols.iter().enumerate() {
        let hcol = hj + 1;
        match *cs {
            ColSrc::A1 { pos } => {
                for t in 1..=r1 {
                    u.set(t, hcol, f1.u.get(t, pos));
                }
            }
            ColSrc::FCol { fpos, zpos } => {
                let fc = f2.q.image(fpos);
                for t in 1..=r1 {
                    u.set(t, hcol, d.get(t, fc));
                }
                for t in 1..=r2 {
                    u.set(r1 + t, hcol, f2.u.get(t, fpos));
                }
                if fpos > r2 {
                    for s in 1..=r3 {
                        u.set(r1 + r2 + s, hcol, o.get(s, fpos - r2));
                    }
                }
                if let Some(zp) = zpos {
                    for z in 1..=r4 {
                        u.set(r1 + r2 + r3 + z, hcol, f4.u.get(z, zp));
                    }
                }
            }
            ColSrc::GCol { gpos } => {
                for t in 1..=r1 {
                    u.set(t, hcol, f1.u.get(t, r1 + f3.q.image(gpos)));
                }
                for s in 1..=r3 {
                    u.set(r1 + r2 + s, hcol, f3.u.get(s, gpos));
                }
            }
        }
    }

    Ok(RawFactors { p, q, l, u, r })
}

/// `X = L^{-1} B` for unit lower triangular `L` (forward substitution).
fn solve_unit_lower(
    l: &DenseMatrix,
    b: &DenseMatrix,
    ctr: &mut ReductionCounter,
) -> Result<DenseMatrix> {
    let (r, c) = (l.rows(), b.cols());
    let f = b.field();
    let mut x = DenseMatrix::zero(r, c, f);
    for i in 1..=r {
        for j in 1..=c {
            let xc: Vec<u64> = (1..i).map(|t| x.get(t, j)).collect();
            let s = f.dot_accumulate_counted(&l.row(i)[..i - 1], &xc, ctr)?;
            x.set(i, j, f.sub_counted(b.get(i, j), s, ctr));
        }
    }
    Ok(x)
}

/// `X = C U^{-1}` for upper triangular `U` with non-zero diagonal.
fn solve_upper_right(
    c: &DenseMatrix,
    u: &DenseMatrix,
    ctr: &mut ReductionCounter,
) -> Result<DenseMatrix> {
    let (rows, r) = (c.rows(), u.rows());
    let f = u.field();
    let mut x = DenseMatrix::zero(rows, r, f);
    for j in 1..=r {
        let inv = f.inv(u.get(j, j))?;
        let ucol: Vec<u64> = (1..j).map(|t| u.get(t, j)).collect();
        for i in 1..=rows {
            let s = f.dot_accumulate_counted(&x.row(i)[..j - 1], &ucol, ctr)?;
            let v = f.sub_counted(c.get(i, j), s, ctr);
            x.set(i, j, f.mul_counted(v, inv, ctr));
        }
    }
    Ok(x)
}

fn mat_mul(a: &DenseMatrix, b: &DenseMatrix, ctr: &mut ReductionCounter) -> Result<DenseMatrix> {
    let f = a.field();
    let mut out = DenseMatrix::zero(a.rows(), b.cols(), f);
    for j in 1..=b.cols() {
        let col = b.col(j);
        for i in 1..=a.rows() {
            let v = f.dot_accumulate_counted(a.row(i), &col, ctr)?;
            out.set(i, j, v);
        }
    }
    Ok(out)
}

fn mat_sub(a: &DenseMatrix, b: &DenseMatrix, ctr: &mut ReductionCounter) -> Result<DenseMatrix> {
    let f = a.field();
    let mut out = DenseMatrix::zero(a.rows(), a.cols(), f);
    for i in 1..=a.rows() {
        for j in 1..=a.cols() {
            out.set(i, j, f.sub_counted(a.get(i, j), b.get(i, j), ctr));
        }
    }
    Ok(out)
}

fn vstack(a: &DenseMatrix, b: &DenseMatrix) -> Result<DenseMatrix> {
    a.transpose().hstack(&b.transpose()).map(|t| t.transpose())
}
