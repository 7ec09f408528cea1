use num_bigint::BigInt;
use num_traits::Zero;

use crate::quandle::{FiniteQuandle, QuandleOps};
use crate::{EisensteinInteger, Matrix3, QuadraticNumber, Rational, Vector3};

use super::{GeometryError, InvariantReport, RotationQuandle};

/// Mosaic quandle of the spherical tiling {3, n}, 2 <= n <= 5.
///
/// For n = 2 the three equatorial vertices need sqrt3, which lies outside
/// Q(sqrt5); that case is carried by its isomorphism class, the dihedral
/// quandle of order 3.
#[derive(Debug, Clone)]
pub enum SphericalMosaic {
    Dihedral3,
    Geometric {
        n: u32,
        quandle: RotationQuandle<QuadraticNumber, 3>,
    },
}

impl SphericalMosaic {
    pub fn n(&self) -> u32 {
        match self {
            SphericalMosaic::Dihedral3 => 2,
            SphericalMosaic::Geometric { n, .. } => *n,
        }
    }

    pub fn order(&self) -> usize {
        match self {
            SphericalMosaic::Dihedral3 => 3,
            SphericalMosaic::Geometric { quandle, .. } => quandle.order(),
        }
    }

    pub fn geometry(&self) -> Option<&RotationQuandle<QuadraticNumber, 3>> {
        match self {
            SphericalMosaic::Dihedral3 => None,
            SphericalMosaic::Geometric { quandle, .. } => Some(quandle),
        }
    }

    pub fn check_invariants(&self) -> InvariantReport {
        match self {
            SphericalMosaic::Dihedral3 => InvariantReport::default(),
            SphericalMosaic::Geometric { n, quandle } => quandle.check_invariants(*n),
        }
    }

    pub fn to_finite_quandle(&self) -> Result<FiniteQuandle, GeometryError> {
        match self {
            SphericalMosaic::Dihedral3 => {
                FiniteQuandle::dihedral(3).map_err(|e| GeometryError::Structure(e.to_string()))
            }
            SphericalMosaic::Geometric { quandle, .. } => quandle.to_finite_quandle(),
        }
    }
}

fn int(k: i64) -> QuadraticNumber {
    QuadraticNumber::from_rational(Rational::from_integer(BigInt::from(k)))
}

fn vertices(n: u32) -> Vec<Vector3> {
    match n {
        // tetrahedron: sign patterns with even product
        3 => [(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)]
            .into_iter()
            .map(|(a, b, c)| crate::Vector([int(a), int(b), int(c)]))
            .collect(),
        4 => (0..3)
            .flat_map(|i| [Vector3::basis(i), Vector3::basis(i).neg()])
            .collect(),
        // icosahedron: cyclic shifts of (0, +-1, +-phi)
        5 => {
            let phi = QuadraticNumber::phi();
            let mut out = Vec::new();
            for shift in 0..3 {
                for (s1, s2) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                    let base = [QuadraticNumber::zero(), int(s1), int(s2) * phi.clone()];
                    out.push(crate::Vector(std::array::from_fn(|i| {
                        base[(i + 3 - shift) % 3].clone()
                    })));
                }
            }
            out
        }
        _ => unreachable!("n checked by caller"),
    }
}

/// The rotation about `v` by 2pi/n, counterclockwise seen from outside:
/// the unique linear map fixing `v` and moving each neighbour one step
/// along the neighbour cycle.
fn rotation_about(v: &Vector3, all: &[Vector3]) -> Result<Matrix3, GeometryError> {
    let others: Vec<&Vector3> = all.iter().filter(|u| *u != v).collect();
    let max_dot = |pairs: &mut dyn Iterator<Item = QuadraticNumber>| {
        pairs.fold(None::<QuadraticNumber>, |m, d| match m {
            Some(m) if m >= d => Some(m),
            _ => Some(d),
        })
    };
    // adjacent vertices are the closest ones, i.e. those with the largest dot product
    let edge_dot = max_dot(&mut others.iter().map(|u| u.dot(v)))
        .ok_or_else(|| GeometryError::Structure("mosaic needs at least two vertices".into()))?;
    let neighbours: Vec<&Vector3> = others
        .iter()
        .copied()
        .filter(|u| u.dot(v) == edge_dot)
        .collect();
    let next = |u: &Vector3| -> Result<Vector3, GeometryError> {
        neighbours
            .iter()
            .find(|w| w.dot(u) == edge_dot && u.cross(w).dot(v).signum() > 0)
            .map(|w| (*w).clone())
            .ok_or_else(|| GeometryError::Solve(format!("no successor of {u} around {v}")))
    };
    let u0 = neighbours[0].clone();
    let u1 = next(&u0)?;
    let u2 = next(&u1)?;
    let from = Matrix3::from_columns(&[v.clone(), u0, u1.clone()]);
    let to = Matrix3::from_columns(&[v.clone(), u1, u2]);
    let inv = from
        .inverse()
        .map_err(|e| GeometryError::Solve(e.to_string()))?;
    Ok(to.mul_mat(&inv))
}

/// Builds {3, n} for n in 2..=5 and verifies its invariants.
pub fn spherical_mosaic(n: u32) -> Result<SphericalMosaic, GeometryError> {
    match n {
        2 => Ok(SphericalMosaic::Dihedral3),
        3..=5 => {
            let vs = vertices(n);
            let rotations = vs
                .iter()
                .map(|v| rotation_about(v, &vs))
                .collect::<Result<Vec<_>, _>>()?;
            let quandle = RotationQuandle::new(vs, rotations)?;
            let report = quandle.check_invariants(n);
            if !report.is_empty() {
                return Err(GeometryError::Defect(Box::new(report)));
            }
            Ok(SphericalMosaic::Geometric { n, quandle })
        }
        _ => Err(GeometryError::Unsupported(format!(
            "spherical mosaic {{3, {n}}} needs 2 <= n <= 5"
        ))),
    }
}

/// The Euclidean mosaic {3, 6} on the Eisenstein integers:
/// `x * y` rotates `x` about `y` by pi/3.
#[derive(Debug, Clone, Copy, Default)]
pub struct EisensteinMosaic;

impl QuandleOps for EisensteinMosaic {
    type Element = EisensteinInteger;

    fn op(&self, x: &EisensteinInteger, y: &EisensteinInteger) -> EisensteinInteger {
        EisensteinInteger::rotate_about(y, x)
    }

    fn op_inv(&self, x: &EisensteinInteger, y: &EisensteinInteger) -> EisensteinInteger {
        EisensteinInteger::rotate_back_about(y, x)
    }
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct GrowthReport {
    /// Elements in discovery order.
    #[serde(skip)]
    pub elements: Vec<EisensteinInteger>,
    /// Cumulative distinct-element count after each BFS depth; entry 0 is the seeds.
    pub depth_counts: Vec<usize>,
    pub cap: usize,
    pub cap_reached: bool,
}

/// Breadth-first closure of `seeds` in the {3, 6} mosaic, halted once `cap`
/// distinct points are known.
///
/// As in any quandle, right operands can be restricted to the seeds, so each
/// depth applies `* s` and `*^-1 s` for every seed `s` to the previous frontier.
pub fn eisenstein_subquandle(seeds: &[EisensteinInteger], cap: usize) -> GrowthReport {
    let mosaic = EisensteinMosaic;
    let mut seen = std::collections::HashSet::new();
    let mut elements = Vec::new();
    for s in seeds {
        if seen.insert(s.clone()) {
            elements.push(s.clone());
        }
    }
    let mut depth_counts = vec![elements.len()];
    let mut frontier = elements.clone();
    let mut cap_reached = elements.len() >= cap;
    'grow: while !frontier.is_empty() && !cap_reached {
        let mut next = Vec::new();
        for x in &frontier {
            for s in seeds {
                for z in [mosaic.op(x, s), mosaic.op_inv(x, s)] {
                    if seen.insert(z.clone()) {
                        elements.push(z.clone());
                        next.push(z);
                        if elements.len() >= cap {
                            cap_reached = true;
                            depth_counts.push(elements.len());
                            break 'grow;
                        }
                    }
                }
            }
        }
        if !next.is_empty() {
            depth_counts.push(elements.len());
        }
        frontier = next;
    }
    GrowthReport {
        elements,
        depth_counts,
        cap,
        cap_reached,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quandle::find_isomorphism;

    fn e(a: i64, b: i64) -> EisensteinInteger {
        EisensteinInteger::new(a.into(), b.into())
    }

    #[test]
    fn mosaic_orders() {
        let orders: Vec<usize> = (2..=5)
            .map(|n| spherical_mosaic(n).unwrap().order())
            .collect();
        assert_eq!(orders, vec![3, 4, 6, 12]);
        assert!(spherical_mosaic(6).is_err());
        assert!(spherical_mosaic(1).is_err());
    }

    #[test]
    fn mosaics_are_connected_quandles() {
        for n in 2..=5 {
            let q = spherical_mosaic(n).unwrap().to_finite_quandle().unwrap();
            assert!(q.is_quandle(), "{{3,{n}}}");
            assert!(q.is_connected(), "{{3,{n}}}");
        }
    }

    #[test]
    fn mosaic_two_is_dihedral_three() {
        let q = spherical_mosaic(2).unwrap().to_finite_quandle().unwrap();
        assert!(find_isomorphism(&q, &FiniteQuandle::dihedral(3).unwrap()).is_some());
    }

    #[test]
    fn octahedral_rotation_about_e1() {
        let m = spherical_mosaic(4).unwrap();
        let g = m.geometry().unwrap();
        let r = g.rotation_of(0);
        assert_eq!(r.apply(&Vector3::basis(0)), Vector3::basis(0));
        assert_eq!(r.order(8), Some(4));
        // counterclockwise about +e1 takes e2 to e3
        assert_eq!(r.apply(&Vector3::basis(1)), Vector3::basis(2));
    }

    #[test]
    fn eisenstein_growth() {
        let single = eisenstein_subquandle(&[e(2, 1)], 100);
        assert_eq!(single.elements, vec![e(2, 1)]);
        assert!(!single.cap_reached);

        let m = EisensteinMosaic;
        assert_eq!(m.op(&m.op(&e(0, 0), &e(1, 0)), &e(0, 0)), e(1, 0));

        let report = eisenstein_subquandle(&[e(0, 0), e(1, 0)], 2000);
        assert!(report.cap_reached);
        assert_eq!(report.elements.len(), 2000);
        assert!(report.depth_counts.windows(2).all(|w| w[0] < w[1]));
    }
}
