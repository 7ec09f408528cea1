//! The 16-, 24- and 600-cell quandles.
//!
//! Rotation tables are stored as text, one block per distinct matrix: the
//! vertices sharing it (each standing for `+v` and `-v`) and the matrix rows.
//! Every number is written doubled, so a token `t` denotes `t / 2`; the
//! tokens `p` and `q` stand for phi and phi^-1.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::{Matrix4, QuadraticNumber, Rational, Vector4};

use super::{GeometryError, InvariantReport, RotationQuandle};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Cell {
    C16,
    C24,
    C600,
}

impl Cell {
    pub fn vertex_count(self) -> usize {
        match self {
            Cell::C16 => 8,
            Cell::C24 => 24,
            Cell::C600 => 120,
        }
    }

    /// Order of each rotation: 2pi/3, pi/2 and 2pi/5 respectively.
    pub fn rotation_order(self) -> u32 {
        match self {
            Cell::C16 => 3,
            Cell::C24 => 4,
            Cell::C600 => 5,
        }
    }

    /// Size of the matching conjugation quandle (number of distinct rotations).
    pub fn rotation_count(self) -> usize {
        match self {
            Cell::C16 => 4,
            Cell::C24 => 6,
            Cell::C600 => 12,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Cell::C16 => "16-cell",
            Cell::C24 => "24-cell",
            Cell::C600 => "600-cell",
        }
    }

    pub fn blocks(self) -> &'static [RotationBlock] {
        match self {
            Cell::C16 => CELL16,
            Cell::C24 => CELL24,
            Cell::C600 => CELL600,
        }
    }

    /// Generator pair `(v, w)` for the epimorphism check, in the doubled-coordinate notation.
    fn generator_pair(self) -> (&'static str, &'static str) {
        match self {
            Cell::C16 => ("2 0 0 0", "0 2 0 0"),
            Cell::C24 => ("2 2 0 0", "0 2 0 2"),
            // w = -1/2 (phi^-1 e1 + phi e3 - e4)
            Cell::C600 => ("2 0 0 0", "-q 0 -p 1"),
        }
    }
}

/// One distinct rotation and the vertex representatives assigned to it.
#[derive(Debug, Clone, Copy)]
pub struct RotationBlock {
    pub vertices: &'static [&'static str],
    pub matrix: [&'static str; 4],
}

const CELL16: &[RotationBlock] = &[
    RotationBlock {
        vertices: &["2 0 0 0"],
        matrix: ["2 0 0 0", "0 0 0 2", "0 2 0 0", "0 0 2 0"],
    },
    RotationBlock {
        vertices: &["0 2 0 0"],
        matrix: ["0 0 -2 0", "0 2 0 0", "0 0 0 -2", "2 0 0 0"],
    },
    RotationBlock {
        vertices: &["0 0 2 0"],
        matrix: ["0 0 0 -2", "2 0 0 0", "0 0 2 0", "0 -2 0 0"],
    },
    RotationBlock {
        vertices: &["0 0 0 2"],
        matrix: ["0 -2 0 0", "0 0 -2 0", "2 0 0 0", "0 0 0 2"],
    },
];

const CELL24: &[RotationBlock] = &[
    RotationBlock {
        vertices: &["2 2 0 0", "2 -2 0 0"],
        matrix: ["2 0 0 0", "0 2 0 0", "0 0 0 -2", "0 0 2 0"],
    },
    RotationBlock {
        vertices: &["0 0 2 2", "0 0 2 -2"],
        matrix: ["0 -2 0 0", "2 0 0 0", "0 0 2 0", "0 0 0 2"],
    },
    RotationBlock {
        vertices: &["2 0 2 0", "0 2 0 2"],
        matrix: ["1 -1 1 1", "1 1 -1 1", "1 1 1 -1", "-1 1 1 1"],
    },
    RotationBlock {
        vertices: &["2 0 -2 0", "0 2 0 -2"],
        matrix: ["1 -1 -1 -1", "1 1 1 -1", "-1 -1 1 -1", "1 -1 1 1"],
    },
    RotationBlock {
        vertices: &["2 0 0 2", "0 2 -2 0"],
        matrix: ["1 -1 -1 1", "1 1 -1 -1", "1 -1 1 -1", "1 1 1 1"],
    },
    RotationBlock {
        vertices: &["0 2 2 0", "2 0 0 -2"],
        matrix: ["1 -1 1 -1", "1 1 1 1", "-1 1 1 -1", "-1 -1 1 1"],
    },
];

const CELL600: &[RotationBlock] = &[
    RotationBlock {
        vertices: &["2 0 0 0", "p 1 q 0", "p -1 -q 0", "q p 1 0", "q -p -1 0"],
        matrix: ["2 0 0 0", "0 1 p -q", "0 p -q 1", "0 q -1 -p"],
    },
    RotationBlock {
        vertices: &["0 0 0 2", "0 1 -p q", "0 1 -p -q", "0 q -1 p", "0 q -1 -p"],
        matrix: ["-p 1 q 0", "-1 -q -p 0", "-q -p 1 0", "0 0 0 2"],
    },
    RotationBlock {
        vertices: &["0 0 2 0", "1 0 q -p", "1 0 -q -p", "q 0 p -1", "q 0 -p -1"],
        matrix: ["-q 1 0 -p", "-1 -p 0 -q", "0 0 2 0", "-p q 0 1"],
    },
    RotationBlock {
        vertices: &["0 2 0 0", "1 p 0 q", "1 -p 0 q", "p q 0 1", "p -q 0 1"],
        matrix: ["1 0 q p", "0 2 0 0", "-q 0 -p 1", "p 0 -1 -q"],
    },
    RotationBlock {
        vertices: &["1 1 -1 1", "1 0 -q p", "0 p -q -1", "q p -1 0", "q -1 0 p"],
        matrix: ["-q 1 0 p", "0 1 -p -q", "-p -1 -q 0", "1 -1 -1 1"],
    },
    RotationBlock {
        vertices: &["1 -1 -1 -1", "1 q p 0", "p -q 0 -1", "0 1 p q", "p 0 1 -q"],
        matrix: ["1 0 q -p", "-1 -q p 0", "1 1 1 1", "-1 p 0 -q"],
    },
    RotationBlock {
        vertices: &["1 -1 1 -1", "1 -q p 0", "0 q 1 p", "q 0 p 1", "q -1 0 -p"],
        matrix: ["-q 0 p -1", "-p -q 0 1", "1 -1 1 1", "0 p q 1"],
    },
    RotationBlock {
        vertices: &["1 -1 -1 1", "1 p 0 -q", "p 0 -1 q", "p 1 -q 0", "0 p q -1"],
        matrix: ["1 1 -1 1", "q 1 0 -p", "-p 1 -q 0", "0 -1 -p -q"],
    },
    RotationBlock {
        vertices: &["1 1 -1 -1", "1 q -p 0", "0 q 1 -p", "q 1 0 -p", "q 0 -p 1"],
        matrix: ["-q p -1 0", "0 -q -1 -p", "-p 0 1 -q", "-1 -1 -1 1"],
    },
    RotationBlock {
        vertices: &["1 1 1 1", "1 -p 0 -q", "p 0 1 q", "0 p q 1", "p -1 q 0"],
        matrix: ["1 -q p 0", "-1 1 1 1", "1 0 -q p", "1 p 0 -q"],
    },
    RotationBlock {
        vertices: &["1 -1 1 1", "1 0 q p", "0 p -q 1", "q 1 0 p", "q -p 1 0"],
        matrix: ["-q 0 p 1", "-1 1 -1 1", "0 -p -q 1", "p q 0 1"],
    },
    RotationBlock {
        vertices: &["1 1 1 -1", "1 -q -p 0", "p q 0 -1", "0 1 p -q", "p 0 -1 -q"],
        matrix: ["1 1 -1 -1", "0 -q 1 -p", "-q p 1 0", "-p 0 -1 -q"],
    },
];

fn half_token(token: &str) -> QuadraticNumber {
    let (neg, body) = match token.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, token),
    };
    let doubled = match body {
        "p" => QuadraticNumber::phi(),
        "q" => QuadraticNumber::phi_inv(),
        digits => {
            let n: i64 = digits
                .parse()
                .unwrap_or_else(|_| panic!("bad coordinate token {token:?}"));
            QuadraticNumber::from_rational(Rational::from_integer(BigInt::from(n)))
        }
    };
    let half = QuadraticNumber::from_rational(Rational::new(BigInt::one(), BigInt::from(2)));
    let value = doubled * half;
    if neg {
        -value
    } else {
        value
    }
}

/// Parses four doubled-coordinate tokens into a vector.
pub fn parse_vector(text: &str) -> Vector4 {
    let tokens: Vec<QuadraticNumber> = text.split_whitespace().map(half_token).collect();
    let arr: [QuadraticNumber; 4] = tokens
        .try_into()
        .unwrap_or_else(|_| panic!("need 4 coordinates: {text:?}"));
    crate::Vector(arr)
}

pub fn parse_matrix(rows: &[&str; 4]) -> Matrix4 {
    crate::Matrix(rows.map(|r| parse_vector(r).0))
}

/// Vertex sets in canonical order, generated from their coordinate rules.
pub fn vertex_set(cell: Cell) -> Vec<Vector4> {
    let axis = || {
        (0..4).flat_map(|i| {
            let e = Vector4::basis(i);
            [e.clone(), e.neg()]
        })
    };
    match cell {
        Cell::C16 => axis().collect(),
        Cell::C24 => {
            let mut out = Vec::new();
            for i in 0..4 {
                for j in i + 1..4 {
                    for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                        let mut v = Vector4::zero();
                        v.0[i] = signed_one(si);
                        v.0[j] = signed_one(sj);
                        out.push(v);
                    }
                }
            }
            out
        }
        Cell::C600 => {
            let half =
                QuadraticNumber::from_rational(Rational::new(BigInt::one(), BigInt::from(2)));
            let mut out: Vec<Vector4> = axis().collect();
            for mask in 0..16u32 {
                let coords = std::array::from_fn(|i| {
                    if mask & (8 >> i) == 0 {
                        half.clone()
                    } else {
                        -half.clone()
                    }
                });
                out.push(crate::Vector(coords));
            }
            // 1/2 (phi e_s(1) + e_s(2) + phi^-1 e_s(3)) with independent signs, s in A4
            let magnitudes = [
                QuadraticNumber::phi() * half.clone(),
                half.clone(),
                QuadraticNumber::phi_inv() * half.clone(),
            ];
            for sigma in even_permutations() {
                for mask in 0..8u32 {
                    let mut v = Vector4::zero();
                    for (k, m) in magnitudes.iter().enumerate() {
                        v.0[sigma[k]] = if mask & (4 >> k) == 0 {
                            m.clone()
                        } else {
                            -m.clone()
                        };
                    }
                    out.push(v);
                }
            }
            out
        }
    }
}

fn signed_one(s: i32) -> QuadraticNumber {
    if s > 0 {
        QuadraticNumber::one()
    } else {
        -QuadraticNumber::one()
    }
}

/// The twelve even permutations of `0..4`, lexicographically.
pub fn even_permutations() -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    let distinct = (0..4).all(|i| (i + 1..4).all(|j| p[i] != p[j]));
                    let inversions = (0..4)
                        .flat_map(|i| (i + 1..4).map(move |j| (i, j)))
                        .filter(|&(i, j)| p[i] > p[j])
                        .count();
                    if distinct && inversions % 2 == 0 {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

pub type PolytopeQuandle = RotationQuandle<QuadraticNumber, 4>;

/// Assembles a polytope quandle from a vertex list and rotation blocks: each
/// vertex gets the matrix of the block listing `+v` or `-v`.
pub fn assemble(
    vertices: Vec<Vector4>,
    blocks: &[(Vec<Vector4>, Matrix4)],
) -> Result<PolytopeQuandle, GeometryError> {
    let mut lookup: HashMap<Vector4, usize> = HashMap::new();
    for (b, (reps, _)) in blocks.iter().enumerate() {
        for v in reps {
            for key in [v.clone(), v.neg()] {
                if let Some(prev) = lookup.insert(key, b) {
                    return Err(GeometryError::Structure(format!(
                        "vertex {v} assigned by blocks {prev} and {b}"
                    )));
                }
            }
        }
    }
    if lookup.len() != vertices.len() {
        return Err(GeometryError::Structure(format!(
            "rotation table covers {} vertices, vertex set has {}",
            lookup.len(),
            vertices.len()
        )));
    }
    let assignment = vertices
        .iter()
        .map(|v| {
            lookup
                .get(v)
                .map(|&b| blocks[b].1.clone())
                .ok_or_else(|| GeometryError::MissingRotation(v.to_string()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    RotationQuandle::new(vertices, assignment)
}

/// The rotation table of `cell` as exact data.
pub fn rotation_table(cell: Cell) -> Vec<(Vec<Vector4>, Matrix4)> {
    cell.blocks()
        .iter()
        .map(|b| {
            (
                b.vertices.iter().map(|v| parse_vector(v)).collect(),
                parse_matrix(&b.matrix),
            )
        })
        .collect()
}

/// Builds the quandle and verifies every invariant; a failure means the
/// rotation table is wrong.
pub fn build_cell(cell: Cell) -> Result<PolytopeQuandle, GeometryError> {
    let p = assemble(vertex_set(cell), &rotation_table(cell))?;
    let report = p.check_invariants(cell.rotation_order());
    if !report.is_empty() {
        return Err(GeometryError::Defect(Box::new(report)));
    }
    Ok(p)
}

pub fn build_cell16() -> Result<PolytopeQuandle, GeometryError> {
    build_cell(Cell::C16)
}

pub fn build_cell24() -> Result<PolytopeQuandle, GeometryError> {
    build_cell(Cell::C24)
}

pub fn build_cell600() -> Result<PolytopeQuandle, GeometryError> {
    build_cell(Cell::C600)
}

/// Indices of the generator pair `(v, w)` used for the epimorphism from the
/// twist-spun trefoil quandle.
pub fn generator_pair(cell: Cell, p: &PolytopeQuandle) -> (usize, usize) {
    let (v, w) = cell.generator_pair();
    let find = |s: &str| {
        p.index_of(&parse_vector(s))
            .unwrap_or_else(|| panic!("{s:?} is not a vertex"))
    };
    (find(v), find(w))
}

/// Checks a polytope's invariants against its cell type.
pub fn check(cell: Cell, p: &PolytopeQuandle) -> InvariantReport {
    p.check_invariants(cell.rotation_order())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertex_counts() {
        for cell in [Cell::C16, Cell::C24, Cell::C600] {
            let vs = vertex_set(cell);
            assert_eq!(vs.len(), cell.vertex_count());
            let distinct: std::collections::HashSet<_> = vs.iter().collect();
            assert_eq!(distinct.len(), vs.len());
        }
        assert_eq!(even_permutations().len(), 12);
    }

    #[test]
    fn all_vertices_have_the_same_norm() {
        for cell in [Cell::C16, Cell::C600] {
            for v in vertex_set(cell) {
                assert_eq!(v.dot(&v), QuadraticNumber::one(), "{v}");
            }
        }
        let two = QuadraticNumber::one() + QuadraticNumber::one();
        assert!(vertex_set(Cell::C24).iter().all(|v| v.dot(v) == two));
    }

    #[test]
    fn cell16_matrix_examples() {
        let table = rotation_table(Cell::C16);
        let r_e1 = &table[0].1;
        assert_eq!(r_e1.apply(&Vector4::basis(1)), Vector4::basis(2));
        assert_eq!(table[1].1.det(), QuadraticNumber::one());
        assert_eq!(r_e1.order(6), Some(3));
        assert!(table[3].1.is_special_orthogonal());
        assert_eq!(rotation_table(Cell::C24)[1].1.order(6), Some(4));
        assert_eq!(rotation_table(Cell::C600)[0].1.order(6), Some(5));
    }

    #[test]
    fn every_table_entry_is_a_symmetry() {
        for cell in [Cell::C16, Cell::C24, Cell::C600] {
            for (reps, m) in rotation_table(cell) {
                assert!(m.is_special_orthogonal(), "{cell:?} {m}");
                assert_eq!(m.order(6), Some(cell.rotation_order()));
                for v in reps {
                    assert_eq!(m.apply(&v), v, "{cell:?} fixes {v}");
                }
            }
        }
    }

    #[test]
    fn builds_pass_invariants() {
        assert_eq!(build_cell16().unwrap().order(), 8);
        assert_eq!(build_cell24().unwrap().order(), 24);
        let p = build_cell600().unwrap();
        assert_eq!(p.order(), 120);
        assert_eq!(p.rotations().len(), 12);
    }

    #[test]
    fn inverted_block_breaks_only_equivariance() {
        let mut table = rotation_table(Cell::C600);
        table[5].1 = table[5].1.transpose();
        let p = assemble(vertex_set(Cell::C600), &table).unwrap();
        let report = check(Cell::C600, &p);
        assert!(report.not_special_orthogonal.is_empty());
        assert!(report.not_fixing_vertex.is_empty());
        assert!(report.wrong_order.is_empty());
        assert!(report.not_permuting.is_empty());
        assert!(!report.equivariance.is_empty());
    }

    #[test]
    fn missing_and_duplicate_assignments_are_structural_errors() {
        let mut table = rotation_table(Cell::C16);
        table.pop();
        assert!(matches!(
            assemble(vertex_set(Cell::C16), &table),
            Err(GeometryError::Structure(_))
        ));
        let mut table = rotation_table(Cell::C16);
        table[1].0.push(Vector4::basis(0).neg());
        assert!(matches!(
            assemble(vertex_set(Cell::C16), &table),
            Err(GeometryError::Structure(_))
        ));
    }
}
