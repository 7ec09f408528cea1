//! Knot-quandle presentations of twist-spun knots from arc diagrams.
//!
//! Diagram text format:
//!
//! ```text
//! arcs: a b c d
//! crossing: a c b +1     # under_in over under_out sign
//! start: a
//! end: d
//! ```

use std::fmt;

use thiserror::Error;

use crate::fpq::{FpqError, Presentation, QuandleExpression, Relation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KnotError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("arc '{0}' is not declared")]
    UnknownArc(String),
    #[error("arc '{0}' declared twice")]
    DuplicateArc(String),
    #[error("crossing sign must be +1 or -1, got {0}")]
    BadSign(i64),
    #[error("start and end arcs coincide in a diagram with several arcs")]
    StartEqualsEnd,
    #[error("twist parameter must be at least 1")]
    BadTwist,
    #[error(transparent)]
    Presentation(#[from] FpqError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Crossing {
    pub under_in: String,
    pub over: String,
    pub under_out: String,
    /// `+1`: `under_in * over = under_out`; `-1`: `under_in *^-1 over = under_out`.
    pub sign: i8,
}

/// Combinatorial diagram of a knotted arc.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcDiagram {
    arcs: Vec<String>,
    crossings: Vec<Crossing>,
    start: String,
    end: String,
}

impl ArcDiagram {
    pub fn new(
        arcs: Vec<String>,
        crossings: Vec<Crossing>,
        start: &str,
        end: &str,
    ) -> Result<Self, KnotError> {
        for (i, a) in arcs.iter().enumerate() {
            if arcs[..i].contains(a) {
                return Err(KnotError::DuplicateArc(a.clone()));
            }
        }
        let known = |s: &str| -> Result<(), KnotError> {
            if arcs.iter().any(|a| a == s) {
                Ok(())
            } else {
                Err(KnotError::UnknownArc(s.to_string()))
            }
        };
        for c in &crossings {
            known(&c.under_in)?;
            known(&c.over)?;
            known(&c.under_out)?;
            if c.sign != 1 && c.sign != -1 {
                return Err(KnotError::BadSign(c.sign.into()));
            }
        }
        known(start)?;
        known(end)?;
        if start == end && arcs.len() > 1 {
            return Err(KnotError::StartEqualsEnd);
        }
        Ok(ArcDiagram {
            arcs,
            crossings,
            start: start.to_string(),
            end: end.to_string(),
        })
    }

    pub fn arcs(&self) -> &[String] {
        &self.arcs
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn start(&self) -> &str {
        &self.start
    }

    pub fn end(&self) -> &str {
        &self.end
    }

    /// The trefoil arc: `a * c = b, b * d = c, c * b = d`, from `a` to `d`.
    pub fn trefoil() -> Self {
        parse_diagram(TREFOIL).expect("built-in diagram")
    }

    /// The five-arc example: `a * d = b, c * e = b, e * c = d, c * b = d`, from `a` to `e`.
    pub fn five_arc_example() -> Self {
        parse_diagram(FIVE_ARC).expect("built-in diagram")
    }

    /// A single unknotted arc.
    pub fn unknotted() -> Self {
        ArcDiagram::new(vec!["a".into()], vec![], "a", "a").expect("built-in diagram")
    }
}

pub const TREFOIL: &str =
    "arcs: a b c d\ncrossing: a c b +1\ncrossing: b d c +1\ncrossing: c b d +1\nstart: a\nend: d\n";

pub const FIVE_ARC: &str =
    "arcs: a b c d e\ncrossing: a d b +1\ncrossing: c e b +1\ncrossing: e c d +1\ncrossing: c b d +1\nstart: a\nend: e\n";

impl fmt::Display for ArcDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "arcs: {}", self.arcs.join(" "))?;
        for c in &self.crossings {
            writeln!(
                f,
                "crossing: {} {} {} {:+}",
                c.under_in, c.over, c.under_out, c.sign
            )?;
        }
        writeln!(f, "start: {}", self.start)?;
        writeln!(f, "end: {}", self.end)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistSpinSpec {
    pub diagram: ArcDiagram,
    pub m: u32,
}

impl TwistSpinSpec {
    pub fn new(diagram: ArcDiagram, m: u32) -> Result<Self, KnotError> {
        if m == 0 {
            return Err(KnotError::BadTwist);
        }
        Ok(TwistSpinSpec { diagram, m })
    }
}

fn arc(s: &str) -> QuandleExpression {
    QuandleExpression::generator(s)
}

/// One relation per crossing, in diagram order.
pub fn crossing_relations(d: &ArcDiagram) -> Vec<Relation> {
    d.crossings
        .iter()
        .map(|c| {
            Relation::new(
                QuandleExpression::op(arc(&c.under_in), arc(&c.over), c.sign.into()),
                arc(&c.under_out),
            )
        })
        .collect()
}

/// `u *^m s = u` for every arc `u` other than the start arc `s` and end arc `t`.
pub fn twist_relations(d: &ArcDiagram, m: u32) -> Vec<Relation> {
    d.arcs
        .iter()
        .filter(|u| **u != d.start && **u != d.end)
        .map(|u| {
            Relation::new(
                QuandleExpression::op(arc(u), arc(&d.start), m.into()),
                arc(u),
            )
        })
        .collect()
}

/// Generators are the arcs; crossing relations come first, then twist relations.
pub fn knot_quandle_presentation(spec: &TwistSpinSpec) -> Presentation {
    let mut relations = crossing_relations(&spec.diagram);
    relations.extend(twist_relations(&spec.diagram, spec.m));
    Presentation::new(spec.diagram.arcs.clone(), relations).expect("diagram arcs are declared")
}

pub fn parse_diagram(text: &str) -> Result<ArcDiagram, KnotError> {
    let mut arcs: Option<Vec<String>> = None;
    let mut crossings = Vec::new();
    let mut start = None;
    let mut end = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let err = |message: String| KnotError::Parse { line, message };
        let (key, rest) = content
            .split_once(':')
            .ok_or_else(|| err("expected 'key: value'".into()))?;
        let fields: Vec<&str> = rest.split_whitespace().collect();
        match key.trim() {
            "arcs" => arcs = Some(fields.iter().map(|s| s.to_string()).collect()),
            "crossing" => {
                let [under_in, over, under_out, sign] = fields[..] else {
                    return Err(err("crossing needs under_in over under_out sign".into()));
                };
                let sign: i64 = sign
                    .parse()
                    .map_err(|_| err(format!("bad sign '{sign}'")))?;
                if sign != 1 && sign != -1 {
                    return Err(KnotError::BadSign(sign));
                }
                crossings.push(Crossing {
                    under_in: under_in.into(),
                    over: over.into(),
                    under_out: under_out.into(),
                    sign: sign as i8,
                });
            }
            "start" | "end" => {
                let [s] = fields[..] else {
                    return Err(err(format!("'{}' takes one arc", key.trim())));
                };
                if key.trim() == "start" {
                    start = Some(s.to_string());
                } else {
                    end = Some(s.to_string());
                }
            }
            other => return Err(err(format!("unknown directive '{other}'"))),
        }
    }
    let missing = |what: &str| KnotError::Parse {
        line: 0,
        message: format!("missing '{what}:' line"),
    };
    let arcs = arcs.ok_or_else(|| missing("arcs"))?;
    let start = start.ok_or_else(|| missing("start"))?;
    let end = end.ok_or_else(|| missing("end"))?;
    ArcDiagram::new(arcs, crossings, &start, &end)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpq::parse_presentation;

    fn rels(text: &str) -> Vec<Relation> {
        parse_presentation(text).unwrap().relations().to_vec()
    }

    #[test]
    fn crossing_relations_of_examples() {
        assert_eq!(
            crossing_relations(&ArcDiagram::five_arc_example()),
            rels("gens: a b c d e\nrel: a * d = b\nrel: c * e = b\nrel: e * c = d\nrel: c * b = d")
        );
        assert_eq!(
            crossing_relations(&ArcDiagram::trefoil()),
            rels("gens: a b c d\nrel: a * c = b\nrel: b * d = c\nrel: c * b = d")
        );
        assert!(crossing_relations(&ArcDiagram::unknotted()).is_empty());
    }

    #[test]
    fn twist_relations_of_examples() {
        assert_eq!(
            twist_relations(&ArcDiagram::five_arc_example(), 4),
            rels("gens: a b c d\nrel: b *^4 a = b\nrel: c *^4 a = c\nrel: d *^4 a = d")
        );
        assert_eq!(
            twist_relations(&ArcDiagram::trefoil(), 1),
            rels("gens: a b c\nrel: b * a = b\nrel: c * a = c")
        );
        assert!(twist_relations(&ArcDiagram::unknotted(), 3).is_empty());
    }

    #[test]
    fn mirror_crossing() {
        let d = parse_diagram("arcs: x y z\ncrossing: x y z -1\nstart: x\nend: z\n").unwrap();
        assert_eq!(
            crossing_relations(&d),
            rels("gens: x y z\nrel: x *^-1 y = z")
        );
    }

    #[test]
    fn counts_match_diagram() {
        for d in [
            ArcDiagram::trefoil(),
            ArcDiagram::five_arc_example(),
            ArcDiagram::unknotted(),
        ] {
            let p = knot_quandle_presentation(&TwistSpinSpec::new(d.clone(), 5).unwrap());
            assert_eq!(p.generators().len(), d.arcs().len());
            let twists = if d.arcs().len() > 1 {
                d.arcs().len() - 2
            } else {
                0
            };
            assert_eq!(p.relations().len(), d.crossings().len() + twists);
            assert_eq!(parse_presentation(&p.to_string()).unwrap(), p);
        }
    }

    #[test]
    fn diagram_round_trip_and_errors() {
        let d = ArcDiagram::trefoil();
        assert_eq!(parse_diagram(&d.to_string()).unwrap(), d);
        assert!(matches!(
            parse_diagram("arcs: a b\ncrossing: a q b +1\nstart: a\nend: b"),
            Err(KnotError::UnknownArc(_))
        ));
        assert!(matches!(
            parse_diagram("arcs: a b\ncrossing: a b b 2\nstart: a\nend: b"),
            Err(KnotError::BadSign(2))
        ));
        assert!(matches!(
            parse_diagram("arcs: a b\nstart: a\nend: a"),
            Err(KnotError::StartEqualsEnd)
        ));
        assert!(matches!(
            parse_diagram("arcs: a b\ncrossing: a b\nstart: a\nend: b"),
            Err(KnotError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_diagram("arcs: a a\nstart: a\nend: a"),
            Err(KnotError::DuplicateArc(_))
        ));
        assert!(TwistSpinSpec::new(d, 0).is_err());
    }
}
