use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::report::Report;
use super::workspace::{Dump, Morphism, Workspace};
use crate::bimod::{random_hom, Bimodule, NaturalitySquare};
use crate::cat::corpus::{corings_corpus, ext_corpus};
use crate::cat::{
    corings_compose, ext_compose, ext_compose_via_cotensor, monoidal_parts, CoringCategory, Corings, Ext, Family,
};
use crate::constr::{base_ring_extension, tensor_coring, tensor_extension_unchecked, RightExtension};
use crate::coring::Coring;

/// A command after argument parsing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Check {
        name: String,
    },
    Tensor {
        left: String,
        right: String,
        out: Option<String>,
    },
    ExtendTensor {
        left: String,
        right: String,
        out: Option<String>,
    },
    Compose {
        g: String,
        f: String,
        out: Option<String>,
    },
    BaseExtend {
        morphism: String,
        out: Option<String>,
    },
    VerifyMonoidal {
        category: String,
    },
    Dims {
        name: String,
    },
    EtaNaturality {
        left: String,
        right: String,
        samples: usize,
    },
}

#[derive(Clone, Debug, Default)]
pub struct Options {
    pub seed: u64,
    /// Receives a standalone workspace with the constructed object, if any.
    pub dump: Option<String>,
}

/// Runs `cmd`; the report carries the exit status. A constructed object is
/// returned as a workspace document when `options.dump` is set.
pub fn run_command(ws: &Workspace, cmd: &Command, options: &Options) -> (Report, Option<String>) {
    let mut dump = options.dump.as_ref().map(|_| Dump::new(ws.field));
    let report = match cmd {
        Command::Check { name } => check(ws, name),
        Command::Tensor { left, right, out } => tensor(ws, left, right, out, dump.as_mut()),
        Command::ExtendTensor { left, right, out } => extend_tensor(ws, left, right, out, dump.as_mut()),
        Command::Compose { g, f, out } => compose(ws, g, f, out, dump.as_mut()),
        Command::BaseExtend { morphism, out } => base_extend(ws, morphism, out, dump.as_mut()),
        Command::VerifyMonoidal { category } => verify_monoidal(ws, category),
        Command::Dims { name } => dims(ws, name),
        Command::EtaNaturality { left, right, samples } => eta_naturality(ws, left, right, *samples, options.seed),
    };
    (report, dump.map(|d| d.to_json()))
}

fn unknown(r: &mut Report, name: &str) {
    r.error("unknown-reference", format!("no object named `{name}`"));
}

fn coring_lines(r: &mut Report, c: &Coring) {
    r.push("base-dim", c.base().dim());
    r.push("dim", c.dim());
    r.steps("axiom.", &c.check_axioms());
}

fn extension_lines(r: &mut Report, e: &RightExtension) {
    r.push("source-dim", e.c().dim());
    r.push("target-dim", e.d().dim());
    r.push("source-base-dim", e.c().base().dim());
    r.push("target-base-dim", e.d().base().dim());
    r.steps("condition.", &e.check_conditions());
}

fn check(ws: &Workspace, name: &str) -> Report {
    let mut r = Report::new("check");
    r.push("name", name);
    r.push("field", ws.field);
    if let Some(c) = ws.coring(name) {
        r.push("kind", "coring");
        coring_lines(&mut r, c);
    } else if let Some(e) = ws.extension(name) {
        r.push("kind", "extension");
        extension_lines(&mut r, e);
    } else if let Some(m) = ws.morphism(name) {
        match m {
            Morphism::Ext(m) => {
                r.push("kind", "ext-morphism");
                extension_lines(&mut r, m.extension());
            }
            Morphism::Corings(m) => {
                r.push("kind", "corings-morphism");
                r.push("source-dim", m.source().dim());
                r.push("target-dim", m.target().dim());
                r.verdict("morphism", &m.check());
            }
        }
    } else if let Some(m) = ws.module(name) {
        r.push("kind", "module");
        r.push("dim", m.dim());
        r.verdict("bimodule", &m.check());
    } else if let Some(a) = ws.algebra(name) {
        r.push("kind", "algebra");
        r.push("dim", a.dim());
        r.verdict("algebra", &a.check());
    } else {
        unknown(&mut r, name);
    }
    r
}

fn tensor(ws: &Workspace, left: &str, right: &str, out: &Option<String>, dump: Option<&mut Dump>) -> Report {
    let mut r = Report::new("tensor");
    let name = out.clone().unwrap_or_else(|| format!("{left}⊗{right}"));
    r.push("name", &name);
    let (Some(c), Some(c2)) = (ws.coring(left), ws.coring(right)) else {
        unknown(&mut r, if ws.coring(left).is_none() { left } else { right });
        return r;
    };
    match tensor_coring(c, c2) {
        Ok(t) => {
            coring_lines(&mut r, &t);
            if let Some(d) = dump {
                d.coring(&name, &t);
            }
        }
        Err(e) => r.error("validation-failure", e),
    }
    r
}

fn extend_tensor(ws: &Workspace, left: &str, right: &str, out: &Option<String>, dump: Option<&mut Dump>) -> Report {
    let mut r = Report::new("extend-tensor");
    let name = out.clone().unwrap_or_else(|| format!("{left}⊗{right}"));
    r.push("name", &name);
    let (Some(e), Some(e2)) = (ws.ext_morphism(left), ws.ext_morphism(right)) else {
        unknown(&mut r, if ws.ext_morphism(left).is_none() { left } else { right });
        return r;
    };
    match tensor_extension_unchecked(e.extension(), e2.extension()) {
        Ok(t) => {
            extension_lines(&mut r, &t);
            if let Some(d) = dump {
                d.extension(&name, &t);
            }
        }
        Err(err) => r.error("validation-failure", err),
    }
    r
}

fn compose(ws: &Workspace, g: &str, f: &str, out: &Option<String>, dump: Option<&mut Dump>) -> Report {
    let mut r = Report::new("compose");
    let name = out.clone().unwrap_or_else(|| format!("{g}•{f}"));
    r.push("name", &name);
    if let (Some(gm), Some(fm)) = (ws.corings_morphism(g), ws.corings_morphism(f)) {
        r.push("kind", "corings-morphism");
        match corings_compose(gm, fm) {
            Ok(m) => {
                r.push("source-dim", m.source().dim());
                r.push("target-dim", m.target().dim());
                r.verdict("morphism", &m.check());
            }
            Err(e) => r.error("validation-failure", e),
        }
        return r;
    }
    let (Some(gm), Some(fm)) = (ws.ext_morphism(g), ws.ext_morphism(f)) else {
        unknown(
            &mut r,
            if ws.ext_morphism(g).is_none() && ws.corings_morphism(g).is_none() {
                g
            } else {
                f
            },
        );
        return r;
    };
    r.push("kind", "ext-morphism");
    let m = match ext_compose(&gm, &fm) {
        Ok(m) => m,
        Err(e) => {
            r.error("validation-failure", e);
            return r;
        }
    };
    extension_lines(&mut r, m.extension());
    match ext_compose_via_cotensor(&gm, &fm) {
        Ok(other) if other == m => r.push("cotensor-route", "agree"),
        Ok(_) => {
            r.push("cotensor-route", "disagree");
            r.fail();
        }
        Err(e) => {
            r.push("cotensor-route", e);
            r.fail();
        }
    }
    if let Some(d) = dump {
        d.extension(&name, m.extension());
    }
    r
}

fn base_extend(ws: &Workspace, morphism: &str, out: &Option<String>, dump: Option<&mut Dump>) -> Report {
    let mut r = Report::new("base-extend");
    let name = out.clone().unwrap_or_else(|| format!("base({morphism})"));
    r.push("name", &name);
    let Some(m) = ws.corings_morphism(morphism) else {
        unknown(&mut r, morphism);
        return r;
    };
    match base_ring_extension(m) {
        Ok(b) => {
            r.push("coring.base-dim", b.coring().base().dim());
            r.push("coring.dim", b.coring().dim());
            r.steps("coring.axiom.", &b.coring().check_axioms());
            r.steps("extension.condition.", &b.extension().check_conditions());
            if let Some(d) = dump {
                d.extension(&name, b.extension());
            }
        }
        Err(e) => {
            r.error("invalid-morphism", e);
        }
    }
    r
}

/// The built-in corpus, extended by the workspace's own morphisms of the
/// category and every composable pair they take part in.
fn extend_family<C: CoringCategory>(
    mut family: Family<C::Mor>,
    extra: Vec<(String, C::Mor)>,
    endpoints: impl Fn(&C::Mor) -> (Arc<Coring>, Arc<Coring>),
) -> Family<C::Mor> {
    let first_new = family.morphisms.len();
    family.morphisms.extend(extra);
    let n = family.morphisms.len();
    for i in 0..n {
        for j in 0..n {
            if i < first_new && j < first_new {
                continue;
            }
            let (_, target) = endpoints(&family.morphisms[i].1);
            let (source, _) = endpoints(&family.morphisms[j].1);
            if target == source {
                family.pairs.push((i, j));
            }
        }
    }
    family
}

fn verify_monoidal(ws: &Workspace, category: &str) -> Report {
    let mut r = Report::new("verify-monoidal");
    r.push("category", category);
    r.push("field", ws.field);
    let parts = match category {
        "ext" => {
            let extra = ws
                .morphisms
                .iter()
                .filter_map(|(n, m)| match m {
                    Morphism::Ext(m) => Some((n.clone(), (**m).clone())),
                    Morphism::Corings(_) => None,
                })
                .collect();
            let family = extend_family::<Ext>(ext_corpus(ws.field).family, extra, |m| {
                (m.source().clone(), m.target().clone())
            });
            corpus_lines(&mut r, &family);
            monoidal_parts::<Ext>(&family)
        }
        "corings" => {
            let extra = ws
                .morphisms
                .iter()
                .filter_map(|(n, m)| match m {
                    Morphism::Corings(m) => Some((n.clone(), m.clone())),
                    Morphism::Ext(_) => None,
                })
                .collect();
            let family = extend_family::<Corings>(corings_corpus(ws.field).family, extra, |m| {
                (m.source().clone(), m.target().clone())
            });
            corpus_lines(&mut r, &family);
            monoidal_parts::<Corings>(&family)
        }
        other => {
            r.error(
                "syntax-error",
                format!("unknown category `{other}`; expected ext or corings"),
            );
            return r;
        }
    };
    for (part, v) in &parts {
        r.verdict(&format!("part.{part}"), v);
    }
    r
}

fn corpus_lines<M>(r: &mut Report, family: &Family<M>) {
    r.push("corpus.corings", family.corings.len());
    r.push("corpus.morphisms", family.morphisms.len());
    r.push("corpus.pairs", family.pairs.len());
}

fn dims(ws: &Workspace, name: &str) -> Report {
    let mut r = Report::new("dims");
    r.push("name", name);
    if let Some(c) = ws.coring(name) {
        r.push("kind", "coring");
        r.push("base-dim", c.base().dim());
        r.push("dim", c.dim());
        r.push("tensor-ambient-dim", c.tens().ambient_dim());
        r.push("tensor-dim", c.tens().dim());
    } else if let Some(e) = ws.ext_morphism(name) {
        r.push("kind", "extension");
        r.push("source-dim", e.source().dim());
        r.push("target-dim", e.target().dim());
        r.push("target-base-dim", e.target().base().dim());
        r.push("coaction-ambient-dim", e.extension().tens().ambient_dim());
        r.push("coaction-tensor-dim", e.extension().tens().dim());
    } else if let Some(m) = ws.corings_morphism(name) {
        r.push("kind", "corings-morphism");
        r.push("source-dim", m.source().dim());
        r.push("target-dim", m.target().dim());
    } else if let Some(m) = ws.module(name) {
        r.push("kind", "module");
        r.push("left-dim", m.left_alg().dim());
        r.push("right-dim", m.right_alg().dim());
        r.push("dim", m.dim());
    } else if let Some(a) = ws.algebra(name) {
        r.push("kind", "algebra");
        r.push("dim", a.dim());
    } else {
        unknown(&mut r, name);
    }
    r
}

/// Naturality of `eta` for random right-linear `f: A -> C` and `g: A' -> C'`,
/// each algebra and coring read as a right module over the base.
fn eta_naturality(ws: &Workspace, left: &str, right: &str, samples: usize, seed: u64) -> Report {
    let mut r = Report::new("eta-naturality");
    r.push("seed", seed);
    r.push("samples", samples);
    let (Some(c), Some(c2)) = (ws.coring(left), ws.coring(right)) else {
        unknown(&mut r, if ws.coring(left).is_none() { left } else { right });
        return r;
    };
    let m = Arc::new(Bimodule::regular(c.base().clone()).right_module());
    let m2 = Arc::new(c.carrier().right_module());
    let n = Arc::new(Bimodule::regular(c2.base().clone()).right_module());
    let n2 = Arc::new(c2.carrier().right_module());
    let square = match NaturalitySquare::new(
        m.clone(),
        m2.clone(),
        n.clone(),
        n2.clone(),
        c.carrier().clone(),
        c2.carrier().clone(),
    ) {
        Ok(s) => s,
        Err(e) => {
            r.error("validation-failure", e);
            return r;
        }
    };
    r.push("eta.source-dim", square.eta_source().map().rows());
    r.push("eta.target-dim", square.eta_target().map().rows());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut outcome = Ok(());
    for i in 0..samples {
        let f = random_hom(&m, &m2, &mut rng);
        let g = random_hom(&n, &n2, &mut rng);
        match square.check(&f, &g) {
            Ok(Ok(())) => {}
            Ok(Err(v)) => {
                outcome = Err(v.within("naturality", &format!("sample {i}")));
                break;
            }
            Err(e) => {
                outcome =
                    Err(crate::verdict::Violation::new("naturality", format!("sample {i}"))
                        .with_sides("", e.to_string()));
                break;
            }
        }
    }
    r.verdict("naturality", &outcome);
    r
}
