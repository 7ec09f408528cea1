use std::fmt::Display;
use std::hash::Hash;

use crate::exact::{Field, Matrix};
use crate::quandle::{FiniteQuandle, QuandleMap};
use crate::{Matrix4, Vector4};

use super::polytope::{self, Cell, PolytopeQuandle};
use super::{GeometryError, RotationQuandle};

/// A set of invertible matrices closed under `x * y = y x y^-1`.
#[derive(Debug, Clone)]
pub struct ConjugationQuandle<S, const N: usize> {
    elements: Vec<Matrix<S, N>>,
    table: Vec<Vec<usize>>,
}

impl<S, const N: usize> ConjugationQuandle<S, N>
where
    S: Field + Eq + Hash,
{
    /// Fails if some conjugate `y x y^-1` leaves the set.
    pub fn new(elements: Vec<Matrix<S, N>>) -> Result<Self, GeometryError> {
        let inverses = elements
            .iter()
            .map(|m| {
                m.inverse()
                    .map_err(|e| GeometryError::Structure(e.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let mut table = vec![vec![0; elements.len()]; elements.len()];
        for (x, row) in table.iter_mut().enumerate() {
            for (y, cell) in row.iter_mut().enumerate() {
                let c = elements[y].mul_mat(&elements[x]).mul_mat(&inverses[y]);
                *cell = elements
                    .iter()
                    .position(|m| *m == c)
                    .ok_or(GeometryError::NotClosed { x, y })?;
            }
        }
        Ok(ConjugationQuandle { elements, table })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Matrix<S, N>] {
        &self.elements
    }

    pub fn position(&self, m: &Matrix<S, N>) -> Option<usize> {
        self.elements.iter().position(|e| e == m)
    }
}

impl<S: Field + Eq + Hash + Display, const N: usize> ConjugationQuandle<S, N> {
    pub fn to_finite_quandle(&self) -> Result<FiniteQuandle, GeometryError> {
        FiniteQuandle::from_table(self.table.clone())
            .and_then(|q| q.with_labels(self.elements.iter().map(|m| m.to_string()).collect()))
            .map_err(|e| GeometryError::Structure(e.to_string()))
    }
}

/// Vertices whose rotations make up X16, X24, X600, in the listed order
/// (doubled coordinates).
fn x_set_vertices(cell: Cell) -> &'static [&'static str] {
    match cell {
        Cell::C16 => &["2 0 0 0", "0 2 0 0", "0 0 2 0", "0 0 0 2"],
        Cell::C24 => &[
            "2 2 0 0", "0 0 2 2", "2 0 2 0", "2 0 -2 0", "2 0 0 2", "0 2 2 0",
        ],
        Cell::C600 => &[
            "2 0 0 0",
            "0 0 0 2",
            "0 0 2 0",
            "0 2 0 0",
            "1 1 -1 1",
            "1 -1 -1 -1",
            "1 -1 1 -1",
            "1 -1 -1 1",
            "1 1 -1 -1",
            "1 1 1 1",
            "1 -1 1 1",
            "1 1 1 -1",
        ],
    }
}

pub type RotationConjugationQuandle = ConjugationQuandle<crate::QuadraticNumber, 4>;

/// The conjugation quandle on the rotations `r_v` for the listed vertices of `p`.
pub fn build_x_set(
    cell: Cell,
    p: &PolytopeQuandle,
) -> Result<RotationConjugationQuandle, GeometryError> {
    let elements: Vec<Matrix4> = x_set_vertices(cell)
        .iter()
        .map(|s| {
            let v: Vector4 = polytope::parse_vector(s);
            p.index_of(&v)
                .map(|i| p.rotation_of(i).clone())
                .ok_or_else(|| GeometryError::MissingRotation(v.to_string()))
        })
        .collect::<Result<_, _>>()?;
    ConjugationQuandle::new(elements)
}

pub fn build_x16() -> Result<RotationConjugationQuandle, GeometryError> {
    build_x_set(Cell::C16, &polytope::build_cell16()?)
}

pub fn build_x24() -> Result<RotationConjugationQuandle, GeometryError> {
    build_x_set(Cell::C24, &polytope::build_cell24()?)
}

pub fn build_x600() -> Result<RotationConjugationQuandle, GeometryError> {
    build_x_set(Cell::C600, &polytope::build_cell600()?)
}

/// `(v, r_v) -> r_v` from a rotation quandle onto a conjugation quandle
/// containing every `r_v`.
pub fn rotation_quotient<S, const N: usize>(
    p: &RotationQuandle<S, N>,
    x: &ConjugationQuandle<S, N>,
) -> Result<QuandleMap, GeometryError>
where
    S: Field + Eq + Hash,
{
    let images = (0..p.order())
        .map(|v| {
            x.position(p.rotation_of(v))
                .ok_or_else(|| GeometryError::MissingRotation(format!("vertex {v}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(QuandleMap {
        source_order: p.order(),
        target_order: x.order(),
        images,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn x_set_orders() {
        assert_eq!(build_x16().unwrap().order(), 4);
        assert_eq!(build_x24().unwrap().order(), 6);
        assert_eq!(build_x600().unwrap().order(), 12);
    }

    #[test]
    fn x16_product_example() {
        // R_{e2} e1 = e4, so r_{e1} * r_{e2} = r_{e4}
        let x = build_x16().unwrap();
        let q = x.to_finite_quandle().unwrap();
        assert!(q.is_quandle());
        assert_eq!(q.mul(0, 1), 3);
    }

    #[test]
    fn quotients_have_constant_fibers() {
        for (cell, fiber) in [(Cell::C16, 2), (Cell::C24, 4)] {
            let p = polytope::build_cell(cell).unwrap();
            let x = build_x_set(cell, &p).unwrap();
            let f = rotation_quotient(&p, &x).unwrap();
            assert!(f.is_homomorphism(
                &p.to_finite_quandle().unwrap(),
                &x.to_finite_quandle().unwrap()
            ));
            assert!(f.fiber_sizes().iter().all(|&s| s == fiber));
        }
    }

    #[test]
    fn closure_failure_detected() {
        let p = polytope::build_cell16().unwrap();
        let only_two = vec![p.rotation_of(0).clone(), p.rotation_of(2).clone()];
        assert!(matches!(
            ConjugationQuandle::new(only_two),
            Err(GeometryError::NotClosed { .. })
        ));
    }
}
