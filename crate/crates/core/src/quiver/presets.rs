//! Built-in quivers with potential. Arrows are listed as drawn, with the
//! right-module reading of [`Orientation::RightModule`].

use num_bigint::BigInt;

use super::{parse_quiver, DimVector, Orientation, Potential, Quiver, QuiverWithPotential, Representation, QMatrix};
use crate::error::{Error, Result};
use crate::oracles::Partition;

pub const PRESET_NAMES: &[&str] = &["bbs", "conifold-framed", "q-r", "q-alpha:<partition>"];

const BBS: &str = "\
orientation right-module
vertex 1
vertex inf framing
arrow x: 1 -> 1
arrow y: 1 -> 1
arrow z: 1 -> 1
arrow i: 1 -> inf
potential: + x y z - x z y
";

const CONIFOLD_FRAMED: &str = "\
orientation right-module
vertex 1
vertex 2
vertex inf framing
arrow b1: 1 -> 2
arrow b2: 1 -> 2
arrow a1: 2 -> 1
arrow a2: 2 -> 1
arrow i: 1 -> inf
potential: + a1 b1 a2 b2 - a1 b2 a2 b1
";

const Q_R: &str = "\
orientation right-module
vertex 2
vertex inf framing
arrow b1'': 2 -> 2
arrow a1'': 2 -> 2
arrow a2'': 2 -> 2
arrow a1': 2 -> inf
arrow a2': 2 -> inf
arrow b1': inf -> 2
potential: + a1'' b1' a2' - a2'' b1' a1'
potential: + a1'' b1'' a2'' - a2'' b1'' a1''
";

/// Framed 3-loop quiver with `W = x[y, z]`.
pub fn bbs() -> QuiverWithPotential {
    parse_quiver(BBS).expect("built-in preset parses")
}

/// Framed conifold quiver with the Klebanov-Witten potential.
pub fn conifold_framed() -> QuiverWithPotential {
    parse_quiver(CONIFOLD_FRAMED).expect("built-in preset parses")
}

/// The quiver whose critical locus carries the Quot scheme of a line.
pub fn q_r() -> QuiverWithPotential {
    parse_quiver(Q_R).expect("built-in preset parses")
}

fn vertex_name(i: usize) -> String {
    format!("2_{i}")
}

/// The refinement of [`q_r`] along an ordered decomposition with block sizes `alpha`.
pub fn q_alpha(alpha: &Partition) -> Result<QuiverWithPotential> {
    let l = alpha.length();
    if l == 0 {
        return Err(Error::InvalidArgument("q-alpha needs a nonempty partition".into()));
    }
    let mut q = Quiver::new(Orientation::RightModule);
    for i in 1..=l {
        q.add_vertex(&vertex_name(i), false).expect("fresh");
    }
    q.add_vertex("inf", true).expect("fresh");
    for i in 1..=l {
        let v = vertex_name(i);
        for k in 1..=2 {
            q.add_arrow(&format!("a{k}'_{i}"), &v, "inf").expect("fresh");
        }
        q.add_arrow(&format!("b1'_{i}"), "inf", &v).expect("fresh");
        q.add_arrow(&format!("b1''_{i}"), &v, &v).expect("fresh");
    }
    for k in 1..=2 {
        for i in 1..=l {
            for j in 1..=l {
                q.add_arrow(&format!("a{k}''_{i}_{j}"), &vertex_name(i), &vertex_name(j))
                    .expect("fresh");
            }
        }
    }
    let mut terms: Vec<(i64, String)> = Vec::new();
    for i in 1..=l {
        for j in 1..=l {
            terms.push((1, format!("a1''_{j}_{i} b1'_{j} a2'_{i}")));
            terms.push((-1, format!("a2''_{j}_{i} b1'_{j} a1'_{i}")));
        }
    }
    for i in 1..=l {
        for j in 1..=l {
            terms.push((1, format!("a1''_{j}_{i} b1''_{j} a2''_{i}_{j}")));
            terms.push((-1, format!("a2''_{j}_{i} b1''_{j} a1''_{i}_{j}")));
        }
    }
    let named: Vec<(i64, &str)> = terms.iter().map(|(c, w)| (*c, w.as_str())).collect();
    let potential = Potential::from_names(&q, &named).map_err(|e| Error::InvalidArgument(e.to_string()))?;
    Ok(QuiverWithPotential { quiver: q, potential })
}

/// `(1^{alpha_1}, ..., r^{alpha_r}, 1)`: block sizes in ascending order, then the framing.
pub fn q_alpha_dims(alpha: &Partition) -> DimVector {
    let mut d = alpha.parts();
    d.push(1);
    DimVector(d)
}

/// Look up a preset by name; `q-alpha:2,1,1` takes a partition.
pub fn preset(name: &str) -> Result<QuiverWithPotential> {
    match name {
        "bbs" => Ok(bbs()),
        "conifold-framed" => Ok(conifold_framed()),
        "q-r" => Ok(q_r()),
        _ => match name.strip_prefix("q-alpha:") {
            Some(p) => q_alpha(&p.parse()?),
            None => Err(Error::Unknown {
                kind: "preset",
                name: name.into(),
                available: PRESET_NAMES.join(", "),
            }),
        },
    }
}

/// Dimension vector `(n+1, n, 1)` on the framed conifold quiver.
pub fn conifold_dims(n: usize) -> DimVector {
    DimVector(vec![n + 1, n, 1])
}

/// Dimension vector `(n, 1)` on the framed 3-loop quiver or on `Q_r`.
pub fn framed_loop_dims(n: usize) -> DimVector {
    DimVector(vec![n, 1])
}

/// The two open conditions on a framed conifold representation:
/// `rho(b2)` is injective, and the images of `rho(i)` and `rho(b2)` span.
pub fn nn_open_conditions(q: &Quiver, rep: &Representation) -> Result<(bool, bool)> {
    let (b2, iota) = match (q.arrow_id("b2"), q.arrow_id("i")) {
        (Some(b), Some(i)) => (b, i),
        _ => return Err(Error::InvalidArgument("expected the framed conifold quiver".into())),
    };
    let d1 = rep.dims().get(q.vertex_id("1").expect("vertex 1"));
    let d2 = rep.dims().get(q.vertex_id("2").expect("vertex 2"));
    if d1 != d2 + 1 {
        return Err(Error::Shape(format!("expected dimension vector (n+1, n, 1), got {:?}", rep.dims().0)));
    }
    let mb2 = rep.matrix(b2);
    let injective = mb2.rank() == d2;
    let spans = rep.matrix(iota).hconcat(mb2).rank() == d1;
    Ok((injective, spans))
}

/// Forget the decomposition: a representation of `Q_alpha` becomes one of `Q_r`.
pub fn forget_to_q_r(alpha: &Partition, qa: &Quiver, rep: &Representation, qr: &Quiver) -> Result<Representation> {
    let sizes = alpha.parts();
    let l = sizes.len();
    let n: usize = sizes.iter().sum();
    let offs: Vec<usize> = sizes
        .iter()
        .scan(0, |acc, &s| {
            let o = *acc;
            *acc += s;
            Some(o)
        })
        .collect();
    let get = |name: String| -> Result<&QMatrix> {
        qa.arrow_id(&name)
            .map(|a| rep.matrix(a))
            .ok_or_else(|| Error::InvalidArgument(format!("missing arrow {name}")))
    };
    let mut mats = Vec::new();
    for arrow in qr.arrows() {
        let name = arrow.name.as_str();
        let m = match name {
            "a1'" | "a2'" => {
                let k = &name[1..2];
                let mut m = QMatrix::zeros(n, 1);
                for (i, &o) in offs.iter().enumerate() {
                    m.set_block(o, 0, get(format!("a{k}'_{}", i + 1))?);
                }
                m
            }
            "b1'" => {
                let mut m = QMatrix::zeros(1, n);
                for (i, &o) in offs.iter().enumerate() {
                    m.set_block(0, o, get(format!("b1'_{}", i + 1))?);
                }
                m
            }
            "b1''" => {
                let mut m = QMatrix::zeros(n, n);
                for (i, &o) in offs.iter().enumerate() {
                    m.set_block(o, o, get(format!("b1''_{}", i + 1))?);
                }
                m
            }
            "a1''" | "a2''" => {
                let k = &name[1..2];
                let mut m = QMatrix::zeros(n, n);
                for r in 0..l {
                    for c in 0..l {
                        m.set_block(offs[r], offs[c], get(format!("a{k}''_{}_{}", r + 1, c + 1))?);
                    }
                }
                m
            }
            other => return Err(Error::InvalidArgument(format!("unexpected arrow {other} on Q_r"))),
        };
        mats.push(m);
    }
    Representation::new(qr, framed_loop_dims(n), mats)
}

/// Integer coefficients of the relation `dW/da` as `(word, coefficient)` pairs, for display.
pub fn relation_terms(q: &Quiver, w: &Potential, arrow: &str) -> Result<Vec<(String, BigInt)>> {
    let a = q
        .arrow_id(arrow)
        .ok_or_else(|| Error::Unknown {
            kind: "arrow",
            name: arrow.into(),
            available: q.arrows().iter().map(|a| a.name.clone()).collect::<Vec<_>>().join(", "),
        })?;
    Ok(w
        .cyclic_derivative(a)
        .terms()
        .map(|(word, c)| (q.render_word(word), c.clone()))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::{specialize_relations, PathPoly};
    use num_traits::Zero;
    use rand::SeedableRng;

    fn word(q: &Quiver, s: &str) -> Vec<usize> {
        s.split_whitespace().map(|a| q.arrow_id(a).unwrap()).collect()
    }

    #[test]
    fn presets_parse_and_have_expected_sizes() {
        assert_eq!(bbs().potential.terms().len(), 2);
        assert_eq!(conifold_framed().potential.terms().len(), 2);
        assert_eq!(q_r().potential.terms().len(), 4);
        let a = Partition::from_parts(&[2, 1]);
        let qa = q_alpha(&a).unwrap();
        assert_eq!(qa.potential.terms().len(), 16);
        assert_eq!(q_alpha_dims(&a).0, vec![1, 2, 1]);
        assert!(preset("nope").is_err());
        assert!(preset("q-alpha:2,1").is_ok());
    }

    #[test]
    fn conifold_derivative_b1() {
        let f = conifold_framed();
        let q = &f.quiver;
        let d = f.potential.cyclic_derivative(q.arrow_id("b1").unwrap());
        let want = PathPoly::from_terms([(word(q, "a2 b2 a1"), 1), (word(q, "a1 b2 a2"), -1)]);
        assert_eq!(d, want);
    }

    #[test]
    fn q_r_relations_with_b1_prime_zero() {
        let f = q_r();
        let q = &f.quiver;
        let rels = f.potential.superpotential_relations(q);
        let specialized = specialize_relations(&rels, &[q.arrow_id("b1'").unwrap()]);
        let want = [
            PathPoly::from_terms([(word(q, "a2' a1''"), 1), (word(q, "a1' a2''"), -1)]),
            PathPoly::from_terms([(word(q, "a1'' a2''"), 1), (word(q, "a2'' a1''"), -1)]),
            PathPoly::from_terms([(word(q, "a1'' b1''"), 1), (word(q, "b1'' a1''"), -1)]),
            PathPoly::from_terms([(word(q, "a2'' b1''"), 1), (word(q, "b1'' a2''"), -1)]),
        ];
        assert_eq!(specialized.len(), 4);
        for w in &want {
            assert!(specialized.iter().any(|(_, p)| p.equal_up_to_sign(w)), "missing {}", w.render(q));
        }
    }

    #[test]
    fn moduli_dimensions() {
        let c = conifold_framed();
        let b = bbs();
        for n in 0..=50usize {
            let n2 = (n * n) as i64;
            assert_eq!(c.quiver.moduli_dim(&conifold_dims(n)), 2 * n2 + 3 * n as i64);
            assert_eq!(b.quiver.moduli_dim(&framed_loop_dims(n)), 2 * n2 + n as i64);
        }
    }

    #[test]
    fn unframed_conifold_euler_form() {
        let q = conifold_framed().quiver.unframed();
        let d = DimVector(vec![2, 1]);
        assert_eq!(q.euler_form(&d, &d, false), -3);
    }

    #[test]
    fn open_conditions() {
        let f = conifold_framed();
        let q = &f.quiver;
        let mut rep = Representation::zero(q, conifold_dims(1));
        let b2 = q.arrow_id("b2").unwrap();
        let i = q.arrow_id("i").unwrap();
        assert!(!nn_open_conditions(q, &rep).unwrap().0);
        rep.set_matrix(b2, QMatrix::from_rows(&[vec![1], vec![0]])).unwrap();
        rep.set_matrix(i, QMatrix::from_rows(&[vec![0], vec![1]])).unwrap();
        assert_eq!(nn_open_conditions(q, &rep).unwrap(), (true, true));
        rep.set_matrix(i, QMatrix::from_rows(&[vec![1], vec![0]])).unwrap();
        assert_eq!(nn_open_conditions(q, &rep).unwrap(), (true, false));
    }

    #[test]
    fn bbs_scalar_reps_are_critical() {
        let f = bbs();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..10 {
            let rep = Representation::random(&f.quiver, framed_loop_dims(1), &mut rng, 9);
            assert!(rep.trace_potential(&f.quiver, &f.potential).is_zero());
            assert!(rep.is_critical(&f.quiver, &f.potential));
        }
        let z = Representation::zero(&f.quiver, framed_loop_dims(3));
        assert!(z.is_critical(&f.quiver, &f.potential));
    }

    #[test]
    fn q_alpha_trace_is_pulled_back() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        let qr = q_r();
        for parts in [vec![1], vec![1, 1], vec![2, 1], vec![2, 2, 1]] {
            let alpha = Partition::from_parts(&parts);
            let qa = q_alpha(&alpha).unwrap();
            for _ in 0..3 {
                let rep = Representation::random(&qa.quiver, q_alpha_dims(&alpha), &mut rng, 4);
                let down = forget_to_q_r(&alpha, &qa.quiver, &rep, &qr.quiver).unwrap();
                assert_eq!(
                    rep.trace_potential(&qa.quiver, &qa.potential),
                    down.trace_potential(&qr.quiver, &qr.potential)
                );
            }
        }
    }
}
