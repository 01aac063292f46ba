//! End-to-end acceptance run: one line per criterion, nonzero exit on any failure.

use std::path::PathBuf;
use std::process::{Command, ExitCode};
use std::sync::Arc;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use corings::bimod::{random_hom, Bimodule, NaturalitySquare};
use corings::cat::corpus::{corings_corpus, ext_corpus, Objects};
use corings::cat::{
    check_corings_morphism, check_ext_morphism, corings_tensor_morphisms, corings_to_ext, ext_compose,
    ext_compose_via_cotensor, ext_identity, multiplication_iso, verify_corings_monoidal, verify_ext_monoidal,
    CoringsMorphism, ExtMorphism,
};
use corings::constr::{
    base_ring_extension, regular_extension, tensor_coring, tensor_extension, unit_extension, RightExtension,
};
use corings::coring::Coring;
use corings::exactla::{Field, Mat};

const FIELDS: [Field; 2] = [Field::Rationals, Field::Prime(5)];

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// The trivial coring `k`, the dual numbers as a coring over themselves,
/// the 2x2 matrix coalgebra and `k[C2]`.
fn eta_family(field: Field) -> Vec<(&'static str, Arc<Coring>)> {
    let o = Objects::new(field);
    vec![("k", o.k), ("A", o.dual), ("M2", o.m2), ("kC2", o.c2)]
}

fn all_fixtures(field: Field) -> Vec<(&'static str, Arc<Coring>)> {
    let o = Objects::new(field);
    vec![
        ("k", o.k),
        ("kC2", o.c2),
        ("kV4", o.v4),
        ("M2", o.m2),
        ("S", o.sweedler),
        ("A", o.dual),
    ]
}

fn eta_naturality() -> Outcome {
    let mut squares = 0;
    for field in FIELDS {
        let fam = eta_family(field);
        for (pi, (na, c)) in fam.iter().enumerate() {
            for (pj, (nb, c2)) in fam.iter().enumerate() {
                let ctx = format!("{field}: ({na}, {nb})");
                let m = Arc::new(Bimodule::regular(c.base().clone()).right_module());
                let m2 = Arc::new(c.carrier().right_module());
                let n = Arc::new(Bimodule::regular(c2.base().clone()).right_module());
                let n2 = Arc::new(c2.carrier().right_module());
                let square = NaturalitySquare::new(
                    m.clone(),
                    m2.clone(),
                    n.clone(),
                    n2.clone(),
                    c.carrier().clone(),
                    c2.carrier().clone(),
                )
                .map_err(|e| format!("{ctx}: {e}"))?;
                for eta in [square.eta_source(), square.eta_target()] {
                    let k = eta.map().rows();
                    ensure(
                        eta.map().mul(eta.inverse()) == Mat::identity(field, k)
                            && eta.inverse().mul(eta.map()) == Mat::identity(field, k),
                        || format!("{ctx}: eta is not invertible"),
                    )?;
                }
                let mut rng = ChaCha8Rng::seed_from_u64((pi * 4 + pj) as u64);
                for s in 0..25 {
                    let f = random_hom(&m, &m2, &mut rng);
                    let g = random_hom(&n, &n2, &mut rng);
                    match square.check(&f, &g) {
                        Ok(Ok(())) => squares += 1,
                        Ok(Err(v)) => return Err(format!("{ctx}, sample {s}: {v}")),
                        Err(e) => return Err(format!("{ctx}, sample {s}: {e}")),
                    }
                }
            }
        }
    }
    Ok(format!("{squares} naturality squares"))
}

/// `Delta(c (x) c') = sum (c1 (x) c'1) (x) (c2 (x) c'2)`, summed from the
/// Sweedler terms of each factor.
fn tensor_comul_oracle(c: &Coring, c2: &Coring) -> Mat {
    let field = c.field();
    let (n, n2) = (c.dim(), c2.dim());
    let big = n * n2;
    let mut out = Mat::zeros(field, big, big * big);
    for i in 0..n {
        for j in 0..n2 {
            for (a, b, x) in c.sweedler(i) {
                for (a2, b2, y) in c2.sweedler(j) {
                    let col = (a * n2 + a2) * big + (b * n2 + b2);
                    let v = out.get(i * n2 + j, col).clone() + x.clone() * y;
                    out.set(i * n2 + j, col, v);
                }
            }
        }
    }
    out
}

fn tensor_corings() -> Outcome {
    let mut count = 0;
    for field in FIELDS {
        let fx = all_fixtures(field);
        for (na, c) in &fx {
            for (nb, c2) in &fx {
                let ctx = format!("{field}: {na} (x) {nb}");
                let t = tensor_coring(c, c2).map_err(|e| format!("{ctx}: {e}"))?;
                t.check().map_err(|v| format!("{ctx}: {v}"))?;
                let (b, b2) = (c.base().dim(), c2.base().dim());
                let counit_ok = (0..c.dim()).all(|i| {
                    (0..c2.dim()).all(|j| {
                        (0..b).all(|x| {
                            (0..b2).all(|y| {
                                *t.counit().get(i * c2.dim() + j, x * b2 + y)
                                    == c.counit().get(i, x).clone() * c2.counit().get(j, y).clone()
                            })
                        })
                    })
                });
                ensure(counit_ok, || {
                    format!("{ctx}: counit differs from the entrywise product")
                })?;
                let expected = t.tens().project_rows(&tensor_comul_oracle(c, c2));
                ensure(t.comul() == &expected, || {
                    format!("{ctx}: comultiplication differs from the Sweedler sum")
                })?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} tensor corings"))
}

fn fixture_extensions(field: Field) -> Result<Vec<(String, RightExtension)>, String> {
    let mut out = Vec::new();
    for (name, c) in all_fixtures(field) {
        out.push((
            format!("reg({name})"),
            regular_extension(c.clone()).map_err(|e| e.to_string())?,
        ));
        out.push((format!("unit({name})"), unit_extension(c).map_err(|e| e.to_string())?));
    }
    for (name, m) in ext_corpus(field).family.morphisms {
        out.push((name, m.extension().clone()));
    }
    for (name, m) in corings_corpus(field).family.morphisms {
        let b = base_ring_extension(&m).map_err(|e| format!("{name}: {e}"))?;
        out.push((format!("base({name})"), b.extension().clone()));
    }
    Ok(out)
}

fn tensor_extensions() -> Outcome {
    let mut count = 0;
    for field in FIELDS {
        let exts = fixture_extensions(field)?;
        for (na, e) in &exts {
            for (nb, e2) in &exts {
                if e.c().dim() * e2.c().dim() > 16 || e.d().dim() * e2.d().dim() > 16 {
                    continue;
                }
                let ctx = format!("{field}: {na} (x) {nb}");
                let t = tensor_extension(e, e2).map_err(|err| format!("{ctx}: {err}"))?;
                for (cond, v) in t.check_conditions() {
                    ensure(matches!(v, Some(Ok(()))), || format!("{ctx}: {cond} {v:?}"))?;
                }
                count += 1;
            }
        }
    }
    Ok(format!("{count} tensor extensions"))
}

fn category_laws() -> Outcome {
    let mut chains = 0;
    for field in FIELDS {
        let corpus = ext_corpus(field);
        let ms = &corpus.family.morphisms;
        for chain in &corpus.chains {
            let [(nf, f), (ng, g), (nh, h)] = chain.map(|i| (&ms[i].0, &ms[i].1));
            let ctx = format!("{field}: {nf}, {ng}, {nh}");
            let err = |e: corings::Error| format!("{ctx}: {e}");
            for m in [f, g, h] {
                ensure(
                    ext_compose(m, &ext_identity(m.source().clone())).map_err(err)? == *m,
                    || format!("{ctx}: right identity law"),
                )?;
                ensure(
                    ext_compose(&ext_identity(m.target().clone()), m).map_err(err)? == *m,
                    || format!("{ctx}: left identity law"),
                )?;
            }
            let left = ext_compose(&ext_compose(h, g).map_err(err)?, f).map_err(err)?;
            let right = ext_compose(h, &ext_compose(g, f).map_err(err)?).map_err(err)?;
            ensure(left == right, || format!("{ctx}: associativity"))?;
            chains += 1;
        }
    }
    Ok(format!("{chains} chains"))
}

fn composable_pairs(ms: &[(String, ExtMorphism)]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (i, (_, f)) in ms.iter().enumerate() {
        for (j, (_, g)) in ms.iter().enumerate() {
            if f.target() == g.source() {
                out.push((i, j));
            }
        }
    }
    out
}

fn cotensor_route() -> Outcome {
    let mut count = 0;
    for field in FIELDS {
        let mut ms = ext_corpus(field).family.morphisms;
        for (name, c) in all_fixtures(field) {
            ms.push((format!("id({name})"), ext_identity(c)));
        }
        for (i, j) in composable_pairs(&ms) {
            let (f, g) = (&ms[i].1, &ms[j].1);
            let ctx = format!("{field}: {} • {}", ms[j].0, ms[i].0);
            let a = ext_compose(g, f).map_err(|e| format!("{ctx}: {e}"))?;
            let b = ext_compose_via_cotensor(g, f).map_err(|e| format!("{ctx}: {e}"))?;
            ensure(a.coact_lift() == b.coact_lift() && a == b, || {
                format!("{ctx}: routes disagree")
            })?;
            count += 1;
        }
    }
    Ok(format!("{count} composable pairs"))
}

fn ext_monoidal() -> Outcome {
    for field in FIELDS {
        verify_ext_monoidal(&ext_corpus(field).family).map_err(|v| format!("{field}: {v}"))?;
    }
    Ok("identity preservation, interchange, unit, associator".into())
}

fn corings_monoidal() -> Outcome {
    let mut count = 0;
    for field in FIELDS {
        let corpus = corings_corpus(field);
        let ms = &corpus.family.morphisms;
        for (na, m) in ms {
            for (nb, m2) in ms {
                if m.source().dim() * m2.source().dim() > 16 {
                    continue;
                }
                let ctx = format!("{field}: {na} (x) {nb}");
                let t = corings_tensor_morphisms(m, m2).map_err(|e| format!("{ctx}: {e}"))?;
                check_corings_morphism(&t).map_err(|v| format!("{ctx}: {v}"))?;
                ensure(t.phi() == &m.phi().kron(m2.phi()), || {
                    format!("{ctx}: phi is not the Kronecker product")
                })?;
                count += 1;
            }
        }
        verify_corings_monoidal(&corpus.family).map_err(|v| format!("{field}: {v}"))?;
    }
    Ok(format!("{count} tensor morphisms, monoidal parts"))
}

fn bridge() -> Outcome {
    let mut count = 0;
    for field in FIELDS {
        for (name, m) in corings_corpus(field).family.morphisms {
            let e = corings_to_ext(&m).map_err(|e| format!("{field}: {name}: {e}"))?;
            check_ext_morphism(&e).map_err(|v| format!("{field}: {name}: {v}"))?;
            count += 1;
        }
        for (name, c) in all_fixtures(field) {
            let ctx = format!("{field}: id({name})");
            let id = CoringsMorphism::identity(c.clone());
            let ext = base_ring_extension(&id).map_err(|e| format!("{ctx}: {e}"))?;
            let psi = multiplication_iso(&ext, &c).map_err(|e| format!("{ctx}: {e}"))?;
            psi.check().map_err(|v| format!("{ctx}: psi: {v}"))?;
            let inv = psi
                .phi()
                .inverse()
                .ok_or_else(|| format!("{ctx}: psi is not invertible"))?;
            let varphi_inv = psi
                .varphi()
                .inverse()
                .ok_or_else(|| format!("{ctx}: base map is not invertible"))?;
            let back = CoringsMorphism::new(c.clone(), ext.coring().clone(), inv, varphi_inv)
                .map_err(|e| format!("{ctx}: {e}"))?;
            back.check().map_err(|v| format!("{ctx}: psi inverse: {v}"))?;
            let as_ext: ExtMorphism = ext.extension().clone().into();
            let back = ExtMorphism::from_coring_iso(&back).map_err(|e| format!("{ctx}: {e}"))?;
            let round = ext_compose(&as_ext, &back).map_err(|e| format!("{ctx}: {e}"))?;
            ensure(round == ext_identity(c), || {
                format!("{ctx}: not isomorphic to the identity")
            })?;
            count += 1;
        }
    }
    Ok(format!("{count} bridged morphisms and identity isomorphisms"))
}

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn cli(file: &str, args: &[&str]) -> (String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_corings"))
        .arg("--workspace")
        .arg(data(file))
        .args(args)
        .output()
        .expect("the binary runs");
    (
        String::from_utf8_lossy(&out.stdout).into_owned(),
        out.status.code().unwrap_or(-1),
    )
}

fn negative_controls() -> Outcome {
    let cases: [(&str, &[&str], &str, i32); 6] = [
        (
            "broken_counit.json",
            &["check", "C2matrix"],
            "law: right-counit\nwitness: e_12\n",
            1,
        ),
        ("noncoassociative.json", &["check", "G"], "law: coassociativity\n", 1),
        ("noncolinear.json", &["check", "E"], "law: colinearity\n", 1),
        (
            "nonmultiplicative.json",
            &["check", "bad"],
            "witness: varphi: multiplicativity at (x, x)\n",
            1,
        ),
        ("nonlinear_delta.json", &["check", "E"], "law: delta-right-linear\n", 1),
        (
            "nonprime.json",
            &["check", "K"],
            "error: validation-failure\nmessage: field:",
            2,
        ),
    ];
    for (file, args, needle, code) in cases {
        let (out, actual) = cli(file, args);
        ensure(actual == code && out.contains(needle), || {
            format!("{file}: exit {actual}, expected {code} with `{}`", needle.trim_end())
        })?;
    }
    Ok("6 corrupted inputs rejected".into())
}

fn cli_suite() -> String {
    let runs: [(&str, &[&str]); 12] = [
        ("f5.json", &["check", "C2matrix"]),
        ("f5.json", &["tensor", "C2matrix", "C2matrix"]),
        ("f5.json", &["dims", "C2matrix"]),
        ("f5.json", &["check", "R"]),
        ("f5.json", &["compose", "to_k", "id_m"]),
        ("f5.json", &["--json-report", "compose", "eps_s", "id_s"]),
        ("f5.json", &["extend-tensor", "id_m", "grp"]),
        ("f5.json", &["base-extend", "eps_s"]),
        ("q.json", &["eta-naturality", "M2", "T"]),
        ("q.json", &["verify-monoidal", "corings"]),
        ("broken_counit.json", &["check", "C2matrix"]),
        ("nonprime.json", &["check", "K"]),
    ];
    runs.iter()
        .map(|(file, args)| {
            let (out, code) = cli(file, args);
            format!("{file} {}\n{out}exit {code}\n", args.join(" "))
        })
        .collect()
}

fn determinism() -> Outcome {
    let first = cli_suite();
    let second = cli_suite();
    ensure(first == second, || "reports differ between runs".into())?;
    Ok(format!("{} bytes identical across two runs", first.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("eta naturality on fixture pairs", eta_naturality),
        ("tensor product of corings", tensor_corings),
        ("tensor product of extensions", tensor_extensions),
        ("category laws of extension morphisms", category_laws),
        ("bullet composition matches the cotensor route", cotensor_route),
        ("monoidal structure on extension morphisms", ext_monoidal),
        ("monoidal structure on corings morphisms", corings_monoidal),
        ("corings morphisms as extension morphisms", bridge),
        ("negative controls", negative_controls),
        ("determinism of CLI reports", determinism),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} pass: {name} ({detail}; {secs:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL: {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
