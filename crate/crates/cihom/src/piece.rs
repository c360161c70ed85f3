//! Graded pieces of presented modules as explicit finite-dimensional
//! k-vector spaces: a standard-monomial basis of the free cover in one
//! internal degree, the row span of the relation image in that degree, and
//! coordinates on a chosen complement. Every piece is finite-dimensional
//! because the variable weights are positive.

use crate::freemod::{PolyMatrix, PolyVec};
use crate::linalg::RowSpan;
use crate::monomial::ModTerm;
use crate::presentation::Presentation;
use crate::scalar::Scalar;
use std::collections::HashMap;

pub struct GradedPiece {
    pub degree: i64,
    /// Monomial basis of the free cover in this degree.
    pub cover_basis: Vec<ModTerm>,
    index: HashMap<(usize, Vec<u32>), usize>,
    span: RowSpan,
    /// Coordinates (positions into `cover_basis`) forming a basis of the
    /// module piece: the non-pivot columns of the relation span.
    pub reps: Vec<usize>,
}

impl GradedPiece {
    pub fn new(pres: &Presentation, degree: i64) -> GradedPiece {
        let ring = &pres.ring;
        let cover_basis = ring.free_basis_in_degree(pres.base, &pres.gen_twists, degree);
        let mut index = HashMap::new();
        for (i, t) in cover_basis.iter().enumerate() {
            index.insert((t.comp, t.mon.exps.clone()), i);
        }
        let mut span = RowSpan::new(cover_basis.len(), ring.ctx().field);
        for (w, col) in pres.matrix.columns.iter().enumerate() {
            let b = pres.rel_twists[w];
            for m in ring.free_basis_in_degree(pres.base, &[b], degree) {
                let v = col.mul_term(&m.mon, &ring.ctx().field.one());
                let row = expand(ring, pres, &index, cover_basis.len(), &v);
                span.insert(&row);
            }
        }
        let pivots: Vec<usize> = span.pivots();
        let reps: Vec<usize> = (0..cover_basis.len())
            .filter(|i| !pivots.contains(i))
            .collect();
        GradedPiece {
            degree,
            cover_basis,
            index,
            span,
            reps,
        }
    }

    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    /// Coordinates of a free-cover vector in the module piece basis. The
    /// vector must be homogeneous of this piece's degree (zero is fine).
    pub fn coordinates(&self, pres: &Presentation, v: &PolyVec) -> Vec<Scalar> {
        let ring = &pres.ring;
        let row = expand(ring, pres, &self.index, self.cover_basis.len(), v);
        let reduced = self.span.reduce(&row);
        self.reps.iter().map(|&i| reduced[i].clone()).collect()
    }

    /// The free-cover vector realizing basis element `j` of the piece.
    pub fn basis_vector(&self, pres: &Presentation, j: usize) -> PolyVec {
        let t = &self.cover_basis[self.reps[j]];
        let ctx = pres.ring.ctx();
        let mut v = PolyVec::zero(pres.ngens());
        v.comps[t.comp] = crate::poly::Polynomial::from_term(t.mon.clone(), ctx.field.one());
        v
    }
}

fn expand(
    ring: &crate::ring::RingSpec,
    pres: &Presentation,
    index: &HashMap<(usize, Vec<u32>), usize>,
    dim: usize,
    v: &PolyVec,
) -> Vec<Scalar> {
    let field = ring.ctx().field;
    let mut row = vec![field.zero(); dim];
    for (c, p) in v.comps.iter().enumerate() {
        let red = ring.reduce_scalar(pres.base, p);
        for t in &red.terms {
            let i = *index
                .get(&(c, t.0.exps.clone()))
                .expect("reduced term outside the piece basis: inhomogeneous input");
            row[i] = row[i].add(&t.1);
        }
    }
    row
}

/// The matrix of a module map in one internal degree. `mat` carries vectors
/// of the source free cover to the target free cover; `shift` is the amount
/// by which the map lowers internal degree (0 for degree-preserving maps),
/// so the source piece in degree d maps into the target piece in degree
/// d − shift.
pub fn map_matrix(
    source: &Presentation,
    target: &Presentation,
    mat: &PolyMatrix,
    src_piece: &GradedPiece,
    dst_piece: &GradedPiece,
) -> crate::linalg::KMatrix {
    let ctx = source.ring.ctx();
    let mut out = crate::linalg::KMatrix::zero(
        dst_piece.dim(),
        src_piece.dim(),
        ctx.field,
    );
    for j in 0..src_piece.dim() {
        let v = src_piece.basis_vector(source, j);
        let image = mat.apply(&v, ctx);
        let coords = dst_piece.coordinates(target, &image);
        for (i, c) in coords.into_iter().enumerate() {
            out.set(i, j, c);
        }
    }
    out
}
