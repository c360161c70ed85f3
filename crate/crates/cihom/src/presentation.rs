//! Finitely generated graded modules given by presentation matrices.
//!
//! A module is `coker(φ : ⊕_j B(-b_j) → ⊕_i B(-a_i))` over the base ring B
//! (the polynomial ring or the complete intersection). Entries are kept in
//! canonical normal form modulo the relation ideal, every column is
//! homogeneous, and minimalization (unit pivots, then pruning of redundant
//! relations, then a degree-sorted normalization) produces the unique
//! graded Betti data even when the input presentation is redundant.

use std::sync::Arc;

use thiserror::Error;

use crate::freemod::{PolyMatrix, PolyVec};
use crate::hilbert::HilbertSeries;
use crate::poly::Polynomial;
use crate::ring::{Base, RingSpec};
use crate::scalar::Scalar;

#[derive(Debug, Error)]
pub enum PresError {
    #[error("presentation matrix shape does not match the twist vectors")]
    Shape,
    #[error("column {index} of the presentation matrix is not homogeneous of the declared degree")]
    InhomogeneousColumn { index: usize },
}

/// A graded module presented by a homogeneous matrix over Q or R.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub ring: Arc<RingSpec>,
    pub base: Base,
    /// Degrees of the generators (the target free module is ⊕ B(-a_i)).
    pub gen_twists: Vec<i64>,
    /// Degrees of the relations (the source free module is ⊕ B(-b_j)).
    pub rel_twists: Vec<i64>,
    /// Columns are the relations, expressed in the generators.
    pub matrix: PolyMatrix,
}

impl Presentation {
    pub fn new(
        ring: Arc<RingSpec>,
        base: Base,
        gen_twists: Vec<i64>,
        rel_twists: Vec<i64>,
        matrix: PolyMatrix,
    ) -> Result<Presentation, PresError> {
        if matrix.rows != gen_twists.len() || matrix.cols() != rel_twists.len() {
            return Err(PresError::Shape);
        }
        let reduced = PolyMatrix {
            rows: matrix.rows,
            columns: matrix
                .columns
                .iter()
                .map(|c| PolyVec {
                    comps: c
                        .comps
                        .iter()
                        .map(|p| ring.reduce_scalar(base, p))
                        .collect(),
                })
                .collect(),
        };
        if let Err((_, j)) = reduced.check_homogeneous(ring.ctx(), &gen_twists, &rel_twists) {
            return Err(PresError::InhomogeneousColumn { index: j });
        }
        Ok(Presentation {
            ring,
            base,
            gen_twists,
            rel_twists,
            matrix: reduced,
        })
    }

    /// Build from relation columns, deriving each column's degree; zero
    /// columns are dropped.
    pub fn from_columns(
        ring: Arc<RingSpec>,
        base: Base,
        gen_twists: Vec<i64>,
        columns: Vec<PolyVec>,
    ) -> Presentation {
        let ctx = ring.ctx();
        let mut rel_twists = Vec::new();
        let mut kept = Vec::new();
        for c in columns {
            let c = PolyVec {
                comps: c
                    .comps
                    .iter()
                    .map(|p| ring.reduce_scalar(base, p))
                    .collect(),
            };
            if c.is_zero() {
                continue;
            }
            let d = c
                .homogeneous_degree(ctx, &gen_twists)
                .expect("from_columns: inhomogeneous relation column");
            rel_twists.push(d);
            kept.push(c);
        }
        let rows = gen_twists.len();
        Presentation {
            ring,
            base,
            gen_twists,
            rel_twists,
            matrix: PolyMatrix::from_columns(rows, kept),
        }
    }

    /// The free module with the given twists.
    pub fn free(ring: Arc<RingSpec>, base: Base, twists: Vec<i64>) -> Presentation {
        let rows = twists.len();
        Presentation {
            ring,
            base,
            gen_twists: twists,
            rel_twists: Vec::new(),
            matrix: PolyMatrix::zero(rows, 0),
        }
    }

    pub fn zero(ring: Arc<RingSpec>, base: Base) -> Presentation {
        Presentation::free(ring, base, Vec::new())
    }

    /// Cyclic quotient B/I for a homogeneous ideal.
    pub fn from_ideal(ring: Arc<RingSpec>, base: Base, gens: Vec<Polynomial>) -> Presentation {
        let cols = gens
            .into_iter()
            .map(|p| PolyVec { comps: vec![p] })
            .collect();
        Presentation::from_columns(ring, base, vec![0], cols)
    }

    /// The residue field k = B/(x_1..x_n).
    pub fn residue_field(ring: Arc<RingSpec>, base: Base) -> Presentation {
        let ctx = ring.ctx();
        let vars: Vec<Polynomial> = (0..ring.nvars())
            .map(|i| Polynomial::var(ctx, i))
            .collect();
        Presentation::from_ideal(ring, base, vars)
    }

    pub fn ngens(&self) -> usize {
        self.gen_twists.len()
    }

    pub fn nrels(&self) -> usize {
        self.rel_twists.len()
    }

    pub fn relation_columns(&self) -> &[PolyVec] {
        &self.matrix.columns
    }

    pub fn series(&self) -> HilbertSeries {
        self.ring
            .quotient_series(self.base, &self.gen_twists, &self.matrix.columns)
    }

    pub fn is_zero_module(&self) -> bool {
        self.ngens() == 0 || self.series().is_zero_module()
    }

    pub fn dim(&self) -> i64 {
        self.series().dim()
    }

    pub fn length(&self) -> Option<num_bigint::BigInt> {
        self.series().length()
    }

    /// Shift all degrees: `twist(d)` is `M(-d)` (generator degrees go up by d).
    pub fn twist(&self, d: i64) -> Presentation {
        Presentation {
            ring: self.ring.clone(),
            base: self.base,
            gen_twists: self.gen_twists.iter().map(|a| a + d).collect(),
            rel_twists: self.rel_twists.iter().map(|b| b + d).collect(),
            matrix: self.matrix.clone(),
        }
    }

    pub fn direct_sum(&self, other: &Presentation) -> Presentation {
        assert!(self.ring == other.ring && self.base == other.base);
        let g = self.ngens() + other.ngens();
        let mut columns = Vec::new();
        for c in &self.matrix.columns {
            let mut v = PolyVec::zero(g);
            v.comps[..self.ngens()].clone_from_slice(&c.comps);
            columns.push(v);
        }
        for c in &other.matrix.columns {
            let mut v = PolyVec::zero(g);
            v.comps[self.ngens()..].clone_from_slice(&c.comps);
            columns.push(v);
        }
        let mut gen_twists = self.gen_twists.clone();
        gen_twists.extend_from_slice(&other.gen_twists);
        let mut rel_twists = self.rel_twists.clone();
        rel_twists.extend_from_slice(&other.rel_twists);
        Presentation {
            ring: self.ring.clone(),
            base: self.base,
            gen_twists,
            rel_twists,
            matrix: PolyMatrix::from_columns(g, columns),
        }
    }

    /// Tensor product of two presentations over the same base.
    pub fn tensor(&self, other: &Presentation) -> Presentation {
        assert!(self.ring == other.ring && self.base == other.base);
        let g = self.ngens();
        let h = other.ngens();
        let mut gen_twists = Vec::with_capacity(g * h);
        for &a in &self.gen_twists {
            for &c in &other.gen_twists {
                gen_twists.push(a + c);
            }
        }
        let mut columns = Vec::new();
        let mut rel_twists = Vec::new();
        // φ ⊗ 1: relation column j against generator k of `other`.
        for (j, col) in self.matrix.columns.iter().enumerate() {
            for k in 0..h {
                let mut v = PolyVec::zero(g * h);
                for i in 0..g {
                    v.comps[i * h + k] = col.comps[i].clone();
                }
                columns.push(v);
                rel_twists.push(self.rel_twists[j] + other.gen_twists[k]);
            }
        }
        // 1 ⊗ ψ.
        for (l, col) in other.matrix.columns.iter().enumerate() {
            for i in 0..g {
                let mut v = PolyVec::zero(g * h);
                for k in 0..h {
                    v.comps[i * h + k] = col.comps[k].clone();
                }
                columns.push(v);
                rel_twists.push(self.gen_twists[i] + other.rel_twists[l]);
            }
        }
        Presentation {
            ring: self.ring.clone(),
            base: self.base,
            gen_twists,
            rel_twists,
            matrix: PolyMatrix::from_columns(g * h, columns),
        }
    }

    /// The same module regarded over the polynomial ring (relations of the
    /// ring become explicit relation columns).
    /// The same module over an intermediate quotient whose relation list is
    /// a prefix of this ring's: the dropped relations act as zero on the
    /// module, so they are adjoined as explicit relations on each generator.
    pub fn restrict_to(&self, sub: Arc<RingSpec>) -> Presentation {
        let keep = sub.codim();
        assert!(
            keep <= self.ring.codim()
                && self.ring.relations()[..keep] == *sub.relations(),
            "target ring relations must be a prefix"
        );
        let mut columns: Vec<PolyVec> = self
            .matrix
            .columns
            .iter()
            .map(|c| {
                let comps = c
                    .comps
                    .iter()
                    .map(|p| sub.reduce_scalar(Base::R, p))
                    .collect();
                PolyVec { comps }
            })
            .collect();
        let mut rel_twists = self.rel_twists.clone();
        let degs = self.ring.relation_degrees();
        for j in keep..self.ring.codim() {
            let f = &self.ring.relations()[j];
            for (i, &a) in self.gen_twists.iter().enumerate() {
                let mut v = PolyVec::zero(self.ngens());
                v.comps[i] = sub.reduce_scalar(Base::R, f);
                columns.push(v);
                rel_twists.push(degs[j] + a);
            }
        }
        Presentation {
            ring: sub,
            base: Base::R,
            gen_twists: self.gen_twists.clone(),
            rel_twists,
            matrix: PolyMatrix::from_columns(self.ngens(), columns),
        }
    }

    pub fn as_q_module(&self) -> Presentation {
        if self.base == Base::Q {
            return self.clone();
        }
        let mut columns = self.matrix.columns.clone();
        let mut rel_twists = self.rel_twists.clone();
        let degs = self.ring.relation_degrees();
        let relations: Vec<Polynomial> = self.ring.relations().to_vec();
        for (f, d) in relations.iter().zip(&degs) {
            for (i, &a) in self.gen_twists.iter().enumerate() {
                let mut v = PolyVec::zero(self.ngens());
                v.comps[i] = f.clone();
                columns.push(v);
                rel_twists.push(d + a);
            }
        }
        Presentation {
            ring: self.ring.clone(),
            base: Base::Q,
            gen_twists: self.gen_twists.clone(),
            rel_twists,
            matrix: PolyMatrix::from_columns(self.ngens(), columns),
        }
    }

    /// Minimal presentation: eliminate unit entries by pivoting, prune
    /// redundant relation columns, and sort generators and relations by
    /// degree. Free summands (zero rows) survive.
    pub fn minimal_presentation(&self) -> Presentation {
        let ctx = self.ring.ctx();
        let mut gens = self.gen_twists.clone();
        let mut rels = self.rel_twists.clone();
        // Work on a dense grid.
        let mut grid: Vec<Vec<Polynomial>> = (0..self.ngens())
            .map(|i| {
                (0..self.nrels())
                    .map(|j| self.matrix.entry(i, j).clone())
                    .collect()
            })
            .collect();
        loop {
            let mut pivot: Option<(usize, usize, Scalar)> = None;
            'search: for (i, row) in grid.iter().enumerate() {
                for (j, p) in row.iter().enumerate() {
                    if let Some(c) = p.constant_value() {
                        if !c.is_zero() {
                            pivot = Some((i, j, c));
                            break 'search;
                        }
                    }
                }
            }
            let (pi, pj, c) = match pivot {
                Some(t) => t,
                None => break,
            };
            let cinv = c.inv();
            let pivot_row: Vec<Polynomial> = grid[pi].clone();
            for (i, row) in grid.iter_mut().enumerate() {
                if i == pi {
                    continue;
                }
                let head = row[pj].clone();
                if head.is_zero() {
                    continue;
                }
                let factor = head.scale(&cinv);
                for (j, e) in row.iter_mut().enumerate() {
                    if j == pj {
                        continue;
                    }
                    if !pivot_row[j].is_zero() {
                        let delta = factor.mul(&pivot_row[j], ctx);
                        *e = self
                            .ring
                            .reduce_scalar(self.base, &e.sub(&delta, ctx));
                    }
                }
            }
            grid.remove(pi);
            gens.remove(pi);
            for row in &mut grid {
                row.remove(pj);
            }
            rels.remove(pj);
        }
        // Rebuild columns; drop zero columns.
        let g = gens.len();
        let mut columns: Vec<PolyVec> = Vec::new();
        let mut col_twists: Vec<i64> = Vec::new();
        for j in 0..rels.len() {
            let v = PolyVec {
                comps: (0..g).map(|i| grid[i][j].clone()).collect(),
            };
            if !v.is_zero() {
                columns.push(v);
                col_twists.push(rels[j]);
            }
        }
        // Prune redundant relations: keep a minimal generating subset of the
        // relation submodule.
        let kept = self
            .ring
            .minimal_generators(self.base, &gens, &columns, &[]);
        let columns: Vec<PolyVec> = kept.iter().map(|&j| columns[j].clone()).collect();
        let col_twists: Vec<i64> = kept.iter().map(|&j| col_twists[j]).collect();
        // Sort generators by degree (stable) and permute rows accordingly.
        let mut gen_order: Vec<usize> = (0..g).collect();
        gen_order.sort_by_key(|&i| (gens[i], i));
        let gens_sorted: Vec<i64> = gen_order.iter().map(|&i| gens[i]).collect();
        let columns: Vec<PolyVec> = columns
            .iter()
            .map(|c| PolyVec {
                comps: gen_order.iter().map(|&i| c.comps[i].clone()).collect(),
            })
            .collect();
        // Sort relations by degree (stable).
        let mut rel_order: Vec<usize> = (0..columns.len()).collect();
        rel_order.sort_by_key(|&j| (col_twists[j], j));
        let columns: Vec<PolyVec> = rel_order.iter().map(|&j| columns[j].clone()).collect();
        let col_twists: Vec<i64> = rel_order.iter().map(|&j| col_twists[j]).collect();
        Presentation {
            ring: self.ring.clone(),
            base: self.base,
            gen_twists: gens_sorted,
            rel_twists: col_twists,
            matrix: PolyMatrix::from_columns(g, columns),
        }
    }

    /// Degrees of a minimal generating set.
    pub fn mu_twists(&self) -> Vec<i64> {
        self.minimal_presentation().gen_twists
    }

    pub fn mu(&self) -> usize {
        self.mu_twists().len()
    }

    pub fn is_free(&self) -> bool {
        self.minimal_presentation().nrels() == 0
    }

    /// Present the subquotient K/V of a twisted free module, where both are
    /// given by generating vectors and V ⊆ K. The result is minimal; its
    /// Hilbert series is verified against HS(P/V) − HS(P/K).
    pub fn subquotient(
        ring: Arc<RingSpec>,
        base: Base,
        ambient_twists: &[i64],
        k_gens: &[PolyVec],
        v_gens: &[PolyVec],
    ) -> Presentation {
        Presentation::subquotient_with_generators(ring, base, ambient_twists, k_gens, v_gens).0
    }

    /// As `subquotient`, also returning the ambient vectors realizing the
    /// presentation's generators (in order).
    pub fn subquotient_with_generators(
        ring: Arc<RingSpec>,
        base: Base,
        ambient_twists: &[i64],
        k_gens: &[PolyVec],
        v_gens: &[PolyVec],
    ) -> (Presentation, Vec<PolyVec>) {
        let kept =
            ring.minimal_generators(base, ambient_twists, k_gens, v_gens);
        let gens: Vec<PolyVec> = kept.iter().map(|&i| k_gens[i].clone()).collect();
        let gen_twists: Vec<i64> = gens
            .iter()
            .map(|v| {
                v.homogeneous_degree(ring.ctx(), ambient_twists)
                    .expect("subquotient: inhomogeneous generator")
            })
            .collect();
        if gens.is_empty() {
            let hs_v = ring.quotient_series(base, ambient_twists, v_gens);
            let hs_k = ring.quotient_series(base, ambient_twists, k_gens);
            assert!(
                hs_v.sub(&hs_k).is_zero_module(),
                "empty subquotient with a nonzero series"
            );
            return (Presentation::zero(ring, base), Vec::new());
        }
        // Relations: coefficient vectors c with Σ c_i·gens_i ∈ ⟨V⟩.
        let mut family: Vec<PolyVec> = gens.clone();
        family.extend(v_gens.iter().cloned());
        let syz = ring.syzygies(base, ambient_twists, &family);
        let columns: Vec<PolyVec> = syz
            .iter()
            .map(|s| PolyVec {
                comps: s.comps[..gens.len()].to_vec(),
            })
            .filter(|v| !v.is_zero())
            .collect();
        let pres = Presentation::from_columns(ring.clone(), base, gen_twists.clone(), columns)
            .minimal_presentation();
        // Independent series check: HS(K/V) = HS(P/V) − HS(P/K).
        let hs_v = ring.quotient_series(base, ambient_twists, v_gens);
        let hs_k = ring.quotient_series(base, ambient_twists, k_gens);
        let expected = hs_v.sub(&hs_k);
        assert_eq!(
            pres.series(),
            expected,
            "subquotient series does not match its ambient computation"
        );
        assert_eq!(
            pres.gen_twists, gen_twists,
            "minimalization must not permute subquotient generators"
        );
        (pres, gens)
    }

    /// Presentation of the submodule of a twisted free module generated by
    /// `vectors`, together with the inclusion (columns = the chosen minimal
    /// generators as ambient vectors).
    pub fn submodule(
        ring: Arc<RingSpec>,
        base: Base,
        ambient_twists: &[i64],
        vectors: &[PolyVec],
    ) -> (Presentation, PolyMatrix) {
        let kept = ring.minimal_generators(base, ambient_twists, vectors, &[]);
        let gens: Vec<PolyVec> = kept.iter().map(|&i| vectors[i].clone()).collect();
        let gen_twists: Vec<i64> = gens
            .iter()
            .map(|v| {
                v.homogeneous_degree(ring.ctx(), ambient_twists)
                    .expect("submodule: inhomogeneous generator")
            })
            .collect();
        let inclusion = PolyMatrix::from_columns(ambient_twists.len(), gens.clone());
        if gens.is_empty() {
            return (Presentation::zero(ring, base), inclusion);
        }
        let syz = ring.syzygies(base, ambient_twists, &gens);
        let columns: Vec<PolyVec> = syz.iter().cloned().collect();
        let pres = Presentation::from_columns(ring, base, gen_twists, columns);
        (pres, inclusion)
    }
}

/// The dual module Hom(M, B) with its inclusion into the dual free cover.
pub struct DualModule {
    pub pres: Presentation,
    /// Columns express the dual generators ξ_j in the basis e_i^∨ of F_0^∨.
    pub inclusion: PolyMatrix,
    /// Twisted degrees σ_j of the ξ_j inside F_0^∨ (whose twists are -a_i).
    pub dual_twists: Vec<i64>,
}

impl Presentation {
    /// Hom(M, B) as kernel of the transposed presentation map.
    pub fn dual(&self) -> DualModule {
        let ring = &self.ring;
        let dual_source: Vec<i64> = self.gen_twists.iter().map(|a| -a).collect();
        let dual_target: Vec<i64> = self.rel_twists.iter().map(|b| -b).collect();
        let phi_t = self.matrix.transpose(ring.ctx());
        // Kernel of φ^T : F_0^∨ → F_1^∨ = syzygies of its columns.
        let ker_gens: Vec<PolyVec> = if self.nrels() == 0 {
            // Hom of a free module: the dual basis generates freely.
            (0..self.ngens())
                .map(|i| PolyVec::unit(self.ngens(), i, ring.ctx()))
                .collect()
        } else {
            let cols: Vec<PolyVec> = phi_t.columns.clone();
            ring.syzygies(self.base, &dual_target, &cols)
                .iter()
                .cloned()
                .collect()
        };
        let kept = ring.minimal_generators(self.base, &dual_source, &ker_gens, &[]);
        let xi: Vec<PolyVec> = kept.iter().map(|&i| ker_gens[i].clone()).collect();
        let sigma: Vec<i64> = xi
            .iter()
            .map(|v| {
                v.homogeneous_degree(ring.ctx(), &dual_source)
                    .expect("dual: inhomogeneous kernel generator")
            })
            .collect();
        let inclusion = PolyMatrix::from_columns(self.ngens(), xi.clone());
        if xi.is_empty() {
            return DualModule {
                pres: Presentation::zero(ring.clone(), self.base),
                inclusion,
                dual_twists: sigma,
            };
        }
        let syz = ring.syzygies(self.base, &dual_source, &xi);
        let rel_cols: Vec<PolyVec> = syz.iter().cloned().collect();
        let mut pres =
            Presentation::from_columns(ring.clone(), self.base, sigma.clone(), rel_cols);
        // ξ are minimal generators, so no unit pivot can occur; pruning and
        // sorting must keep generator order (already ascending by degree).
        let kept_rels =
            ring.minimal_generators(self.base, &sigma, &pres.matrix.columns, &[]);
        let columns: Vec<PolyVec> = kept_rels
            .iter()
            .map(|&j| pres.matrix.columns[j].clone())
            .collect();
        let rel_twists: Vec<i64> = kept_rels
            .iter()
            .map(|&j| pres.rel_twists[j])
            .collect();
        pres = Presentation {
            ring: ring.clone(),
            base: self.base,
            gen_twists: sigma.clone(),
            rel_twists,
            matrix: PolyMatrix::from_columns(sigma.len(), columns),
        };
        DualModule {
            pres,
            inclusion,
            dual_twists: sigma,
        }
    }

    /// Is the natural map M → M** injective? Returns the verdict and, when
    /// torsion exists, a witness generator of the kernel (as an element of
    /// the free cover of M).
    pub fn torsion_free(&self) -> (bool, Option<PolyVec>) {
        let ring = &self.ring;
        let ctx = ring.ctx();
        let dual = self.dual();
        let double = dual.pres.dual();
        // ev(e_i) as a functional on the dual's free cover G_0 (twists σ_j):
        // coordinates (S_{i,1}, .., S_{i,λ}) in G_0^∨.
        let lambda = dual.pres.ngens();
        let kappa = double.pres.ngens();
        let minus_sigma: Vec<i64> = dual.dual_twists.iter().map(|s| -s).collect();
        let eta: Vec<PolyVec> = double.inclusion.columns.clone();
        // E : F_0 → H_0 expressing each ev(e_i) in the double-dual generators.
        let mut e_cols: Vec<PolyVec> = Vec::new();
        for i in 0..self.ngens() {
            let ev = PolyVec {
                comps: (0..lambda)
                    .map(|j| dual.inclusion.entry(i, j).clone())
                    .collect(),
            };
            let col = if kappa == 0 {
                PolyVec::zero(0)
            } else {
                let c = ring
                    .membership_cofactors(self.base, &minus_sigma, &eta, &ev)
                    .expect("evaluation functional must lie in the double dual");
                PolyVec { comps: c }
            };
            e_cols.push(col);
        }
        // Preimage of im(relations of M**) under E, as vectors in F_0.
        let tau = double.pres.gen_twists.clone();
        let mut family: Vec<PolyVec> = Vec::new();
        let g = self.ngens();
        for (i, c) in e_cols.iter().enumerate() {
            let _ = i;
            family.push(c.clone());
        }
        for rho in &double.pres.matrix.columns {
            family.push(rho.clone());
        }
        // Syzygies in the target H_0 of the combined family [E | ρ]; project
        // to the E block to get the preimage generators.
        let combined_twists: Vec<i64> = {
            let mut t = self.gen_twists.clone();
            t.extend(double.pres.rel_twists.iter().cloned());
            t
        };
        let preimage: Vec<PolyVec> = if kappa == 0 {
            // everything maps to zero: the preimage is all of F_0
            (0..g).map(|i| PolyVec::unit(g, i, ctx)).collect()
        } else {
            // Work with the family as elements of H_0 (twists τ): member
            // degrees are the combined twists.
            let _ = combined_twists;
            let syz = ring.syzygies(self.base, &tau, &family);
            syz.iter()
                .map(|s| PolyVec {
                    comps: s.comps[..g].to_vec(),
                })
                .filter(|v| !v.is_zero())
                .collect()
        };
        for v in &preimage {
            if !ring.is_member(self.base, &self.gen_twists, &self.matrix.columns, v) {
                return (false, Some(v.clone()));
            }
        }
        (true, None)
    }

    /// The cokernel of M → B^λ dual-evaluated against a minimal generating
    /// set of M* (the transpose of the dual inclusion).
    pub fn pushforward(&self) -> Presentation {
        let dual = self.dual();
        let qmat = dual.inclusion.transpose(self.ring.ctx());
        let gen_twists: Vec<i64> = dual.dual_twists.iter().map(|s| -s).collect();
        Presentation::new(
            self.ring.clone(),
            self.base,
            gen_twists,
            self.gen_twists.clone(),
            qmat,
        )
        .expect("pushforward presentation must be homogeneous")
        .minimal_presentation()
    }

    /// The annihilator ideal of M, through the stacked-diagonal colon.
    pub fn annihilator(&self) -> Vec<Polynomial> {
        let ring = &self.ring;
        let g = self.ngens();
        if g == 0 {
            // ann(0) = (1)
            return vec![Polynomial::one(ring.ctx())];
        }
        // Ambient: g copies of F_0, copy c twisted down by a_c so the
        // stacked diagonal vector is homogeneous of degree zero.
        let mut ambient: Vec<i64> = Vec::with_capacity(g * g);
        for c in 0..g {
            for i in 0..g {
                ambient.push(self.gen_twists[i] - self.gen_twists[c]);
            }
        }
        let mut v = PolyVec::zero(g * g);
        for c in 0..g {
            v.comps[c * g + c] = Polynomial::one(ring.ctx());
        }
        let mut family: Vec<PolyVec> = vec![v];
        for c in 0..g {
            for col in &self.matrix.columns {
                let mut w = PolyVec::zero(g * g);
                w.comps[c * g..(c + 1) * g].clone_from_slice(&col.comps);
                family.push(w);
            }
        }
        let syz = ring.syzygies(self.base, &ambient, &family);
        let cands: Vec<PolyVec> = syz
            .iter()
            .map(|s| PolyVec {
                comps: vec![s.comps[0].clone()],
            })
            .filter(|p| !p.is_zero())
            .collect();
        let kept = ring.minimal_generators(self.base, &[0], &cands, &[]);
        kept.iter()
            .map(|&i| cands[i].comps[0].clone())
            .collect()
    }

    /// Krull dimension via the annihilator: dim B/ann(M). Used as an
    /// independent cross-check of the Hilbert-series dimension.
    pub fn dim_via_annihilator(&self) -> i64 {
        if self.is_zero_module() {
            return -1;
        }
        let ann = self.annihilator();
        Presentation::from_ideal(self.ring.clone(), self.base, ann).dim()
    }
}

/// The colon ideal (U : v) = {a : a·v ∈ U} inside a twisted free module.
pub fn colon_ideal(
    ring: &Arc<RingSpec>,
    base: Base,
    ambient_twists: &[i64],
    u_gens: &[PolyVec],
    v: &PolyVec,
) -> Vec<Polynomial> {
    let mut family = vec![v.clone()];
    family.extend(u_gens.iter().cloned());
    let syz = ring.syzygies(base, ambient_twists, &family);
    let cands: Vec<PolyVec> = syz
        .iter()
        .map(|s| PolyVec {
            comps: vec![s.comps[0].clone()],
        })
        .filter(|p| !p.is_zero())
        .collect();
    let kept = ring.minimal_generators(base, &[0], &cands, &[]);
    kept.iter().map(|&i| cands[i].comps[0].clone()).collect()
}

/// Verify that `0 → A --α--> B --β--> C → 0` is a short exact sequence of
/// graded modules, where the maps are given by their matrices on chosen
/// generators (columns = images of the source generators). Returns the list
/// of failed conditions; an empty list certifies exactness.
pub fn ses_failures(
    a: &Presentation,
    b: &Presentation,
    c: &Presentation,
    alpha: &PolyMatrix,
    beta: &PolyMatrix,
) -> Vec<String> {
    let ring = &a.ring;
    let base = a.base;
    let ctx = ring.ctx();
    let mut fails = Vec::new();

    let degree_zero = |map: &PolyMatrix, src: &Presentation, dst: &Presentation| -> bool {
        map.columns.iter().zip(&src.gen_twists).all(|(col, &aj)| {
            col.is_zero()
                || col.homogeneous_degree(ctx, &dst.gen_twists) == Some(aj)
        })
    };
    if !degree_zero(alpha, a, b) || !degree_zero(beta, b, c) {
        fails.push("a map is not homogeneous of degree zero".into());
    }

    let well_defined = |map: &PolyMatrix, src: &Presentation, dst: &Presentation| -> bool {
        src.relation_columns().iter().all(|rho| {
            let img = map.apply(rho, ctx);
            ring.is_member(base, &dst.gen_twists, dst.relation_columns(), &img)
        })
    };
    if !well_defined(alpha, a, b) {
        fails.push("the first map does not send relations into relations".into());
    }
    if !well_defined(beta, b, c) {
        fails.push("the second map does not send relations into relations".into());
    }

    // β ∘ α = 0 in C.
    let comp = beta.compose(alpha, ctx);
    let comp_zero = comp.columns.iter().all(|col| {
        ring.is_member(base, &c.gen_twists, c.relation_columns(), col)
    });
    if !comp_zero {
        fails.push("the composite of the two maps is nonzero".into());
    }

    // β surjective: every generator of C lies in im β + relations.
    let mut beta_span: Vec<PolyVec> = beta.columns.clone();
    beta_span.extend(c.relation_columns().iter().cloned());
    let surj = (0..c.ngens()).all(|j| {
        let u = PolyVec::unit(c.ngens(), j, ctx);
        ring.is_member(base, &c.gen_twists, &beta_span, &u)
    });
    if !surj {
        fails.push("the second map is not surjective".into());
    }

    // Covers of ker(β) ⊆ B: project syzygies of [β columns | relations of C]
    // back to the coordinates of B's generators.
    let kernel_covers = |map: &PolyMatrix, src: &Presentation, dst: &Presentation| -> Vec<PolyVec> {
        let mut family: Vec<PolyVec> = map.columns.clone();
        family.extend(dst.relation_columns().iter().cloned());
        ring.syzygies(base, &dst.gen_twists, &family)
            .iter()
            .map(|s| PolyVec {
                comps: s.comps[..src.ngens()].to_vec(),
            })
            .filter(|v| !v.is_zero())
            .collect()
    };

    // α injective: anything α sends into the relations of B is itself a
    // relation of A.
    let ker_alpha = kernel_covers(alpha, a, b);
    let inj = ker_alpha
        .iter()
        .all(|v| ring.is_member(base, &a.gen_twists, a.relation_columns(), v));
    if !inj {
        fails.push("the first map has a nonzero kernel".into());
    }

    // Exactness in the middle: ker β ⊆ im α + relations of B (the reverse
    // inclusion is the composite-zero condition above).
    let mut alpha_span: Vec<PolyVec> = alpha.columns.clone();
    alpha_span.extend(b.relation_columns().iter().cloned());
    let ker_beta = kernel_covers(beta, b, c);
    let middle = ker_beta
        .iter()
        .all(|v| ring.is_member(base, &b.gen_twists, &alpha_span, v));
    if !middle {
        fails.push("the kernel of the second map exceeds the image of the first".into());
    }

    // Independent count check: the Hilbert series must be additive.
    let additive = b
        .series()
        .sub(&a.series())
        .sub(&c.series())
        .is_zero_module();
    if !additive {
        fails.push("the Hilbert series are not additive across the sequence".into());
    }

    fails
}
