use std::collections::HashMap;
use std::fmt::Display;
use std::hash::Hash;

use serde::Serialize;

use crate::exact::{Field, Matrix, Vector};
use crate::quandle::{FiniteQuandle, QuandleError};

use super::GeometryError;

/// Vertices paired with rotations, `(v, r_v)`, under
/// `(v, r_v) * (w, r_w) = (r_w v, r_{r_w v})`.
///
/// Several vertices may share one rotation; `rotations` holds each distinct
/// matrix once and `rotation_index[v]` points into it.
#[derive(Debug, Clone)]
pub struct RotationQuandle<S, const N: usize> {
    vertices: Vec<Vector<S, N>>,
    rotations: Vec<Matrix<S, N>>,
    rotation_index: Vec<usize>,
    /// `action[w][v]` is the index of `R_w v`, when it lies in the vertex set.
    action: Vec<Vec<Option<usize>>>,
}

/// Everything that can go wrong with a vertex/rotation assignment.
/// Indices refer to vertices unless noted.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub not_special_orthogonal: Vec<usize>,
    pub not_fixing_vertex: Vec<usize>,
    pub wrong_order: Vec<(usize, Option<u32>)>,
    /// Vertices `w` for which `R_w` does not map the vertex set onto itself.
    pub not_permuting: Vec<usize>,
    /// Pairs `(v, w)` with `R_w R_v R_w^-1 != R_{R_w v}`.
    pub equivariance: Vec<(usize, usize)>,
}

impl InvariantReport {
    pub fn is_empty(&self) -> bool {
        self.not_special_orthogonal.is_empty()
            && self.not_fixing_vertex.is_empty()
            && self.wrong_order.is_empty()
            && self.not_permuting.is_empty()
            && self.equivariance.is_empty()
    }

    pub fn summary(&self) -> String {
        format!(
            "{} not SO, {} not fixing, {} wrong order, {} not permuting, {} equivariance failures",
            self.not_special_orthogonal.len(),
            self.not_fixing_vertex.len(),
            self.wrong_order.len(),
            self.not_permuting.len(),
            self.equivariance.len()
        )
    }
}

impl<S, const N: usize> RotationQuandle<S, N>
where
    S: Field + Eq + Hash,
{
    /// `assignment[i]` is the rotation for `vertices[i]`. Equal matrices are
    /// shared. Fails only on duplicate vertices or a length mismatch; the
    /// geometric invariants are checked by [`Self::check_invariants`].
    pub fn new(
        vertices: Vec<Vector<S, N>>,
        assignment: Vec<Matrix<S, N>>,
    ) -> Result<Self, GeometryError> {
        if vertices.len() != assignment.len() {
            return Err(GeometryError::Structure(format!(
                "{} vertices but {} rotations",
                vertices.len(),
                assignment.len()
            )));
        }
        let mut index_of: HashMap<&Vector<S, N>, usize> = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if index_of.insert(v, i).is_some() {
                return Err(GeometryError::Structure(format!("vertex {i} listed twice")));
            }
        }
        let mut rotations: Vec<Matrix<S, N>> = Vec::new();
        let mut matrix_slot: HashMap<Matrix<S, N>, usize> = HashMap::new();
        let mut rotation_index = Vec::with_capacity(vertices.len());
        for m in assignment {
            let next = rotations.len();
            let slot = *matrix_slot.entry(m.clone()).or_insert(next);
            if slot == next {
                rotations.push(m);
            }
            rotation_index.push(slot);
        }
        let by_rotation: Vec<Vec<Option<usize>>> = rotations
            .iter()
            .map(|r| {
                vertices
                    .iter()
                    .map(|v| index_of.get(&r.apply(v)).copied())
                    .collect()
            })
            .collect();
        let action = rotation_index
            .iter()
            .map(|&r| by_rotation[r].clone())
            .collect();
        Ok(RotationQuandle {
            vertices,
            rotations,
            rotation_index,
            action,
        })
    }

    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[Vector<S, N>] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &Vector<S, N> {
        &self.vertices[i]
    }

    pub fn index_of(&self, v: &Vector<S, N>) -> Option<usize> {
        self.vertices.iter().position(|u| u == v)
    }

    /// Distinct rotation matrices, in first-use order.
    pub fn rotations(&self) -> &[Matrix<S, N>] {
        &self.rotations
    }

    pub fn rotation_index(&self, v: usize) -> usize {
        self.rotation_index[v]
    }

    pub fn rotation_of(&self, v: usize) -> &Matrix<S, N> {
        &self.rotations[self.rotation_index[v]]
    }

    /// Index of `R_w v`, if it is a vertex.
    pub fn act(&self, w: usize, v: usize) -> Option<usize> {
        self.action[w][v]
    }

    /// Exhaustive check of every invariant over all vertices and all ordered pairs.
    pub fn check_invariants(&self, expected_order: u32) -> InvariantReport {
        let mut report = InvariantReport::default();
        let per_rotation: Vec<(bool, Option<u32>)> = self
            .rotations
            .iter()
            .map(|r| (r.is_special_orthogonal(), r.order(expected_order.max(6))))
            .collect();
        for v in 0..self.order() {
            let (so, order) = per_rotation[self.rotation_index[v]];
            if !so {
                report.not_special_orthogonal.push(v);
            }
            if order != Some(expected_order) {
                report.wrong_order.push((v, order));
            }
            if self.action[v][v] != Some(v) {
                report.not_fixing_vertex.push(v);
            }
            let mut hit = vec![false; self.order()];
            let total = self.action[v]
                .iter()
                .flatten()
                .filter(|&&u| !std::mem::replace(&mut hit[u], true))
                .count();
            if total != self.order() {
                report.not_permuting.push(v);
            }
        }
        // R_w R_v R_w^-1 depends only on the two rotation classes.
        let inverses: Vec<Option<Matrix<S, N>>> =
            self.rotations.iter().map(|r| r.inverse().ok()).collect();
        let k = self.rotations.len();
        let mut conjugate: Vec<Vec<Option<Matrix<S, N>>>> = vec![vec![None; k]; k];
        for (rw, row) in conjugate.iter_mut().enumerate() {
            let Some(w_inv) = &inverses[rw] else { continue };
            for (rv, slot) in row.iter_mut().enumerate() {
                *slot = Some(
                    self.rotations[rw]
                        .mul_mat(&self.rotations[rv])
                        .mul_mat(w_inv),
                );
            }
        }
        for v in 0..self.order() {
            for w in 0..self.order() {
                let ok = match (
                    &conjugate[self.rotation_index[w]][self.rotation_index[v]],
                    self.action[w][v],
                ) {
                    (Some(c), Some(img)) => c == self.rotation_of(img),
                    _ => false,
                };
                if !ok {
                    report.equivariance.push((v, w));
                }
            }
        }
        report
    }
}

impl<S, const N: usize> RotationQuandle<S, N>
where
    S: Field + Eq + Hash + Display,
{
    /// Operation table with vertex labels; element `i` is `(v_i, r_{v_i})`.
    pub fn to_finite_quandle(&self) -> Result<FiniteQuandle, GeometryError> {
        let n = self.order();
        let mut table = vec![vec![0; n]; n];
        for (v, row) in table.iter_mut().enumerate() {
            for (w, cell) in row.iter_mut().enumerate() {
                *cell = self.action[w][v].ok_or(GeometryError::NotInVertexSet {
                    vertex: v,
                    rotation_of: w,
                })?;
            }
        }
        let labels = self.vertices.iter().map(|v| v.to_string()).collect();
        FiniteQuandle::from_table(table)
            .and_then(|q| q.with_labels(labels))
            .map_err(|e: QuandleError| GeometryError::Structure(e.to_string()))
    }
}
