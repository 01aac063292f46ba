//! The JSON workspace format.
//!
//! Top-level keys are `field`, `algebras`, `modules`, `corings`, `extensions`
//! and `morphisms`. Sections are read in that order and every object may only
//! refer to objects declared before it. The ground field is always available
//! as the algebra `k` and the coring `k`. Loading checks references, shapes and
//! the structure needed to build each object; the coring, extension and
//! morphism axioms are left to the `check` command.

use std::sync::Arc;

use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::algcore::{Algebra, AlgebraMorphism};
use crate::bimod::Bimodule;
use crate::cat::{
    corings_compose, corings_tensor_morphisms, ext_compose, ext_counit, ext_grouplike, ext_identity,
    ext_tensor_morphisms, ext_to_unit, CoringsMorphism, ExtMorphism,
};
use crate::constr::fixtures::{cyclic2_table, grouplike_coalgebra, klein_table, matrix_coalgebra, sweedler_coring};
use crate::constr::{tensor_coring, unit_coring, RightExtension};
use crate::coring::Coring;
use crate::error::Error;
use crate::exactla::{Field, Mat, Scalar};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LoadError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown reference `{name}` in {context}")]
    UnknownReference { name: String, context: String },
    #[error("{context}: {message}")]
    Validation { context: String, message: String },
}

impl LoadError {
    pub fn kind(&self) -> &'static str {
        match self {
            LoadError::Syntax { .. } => "syntax-error",
            LoadError::UnknownReference { .. } => "unknown-reference",
            LoadError::Validation { .. } => "validation-failure",
        }
    }

    fn syntax(context: &str, message: impl Into<String>) -> Self {
        LoadError::Syntax {
            line: 0,
            column: 0,
            message: format!("{context}: {}", message.into()),
        }
    }

    fn invalid(context: &str, e: impl ToString) -> Self {
        LoadError::Validation {
            context: context.to_string(),
            message: e.to_string(),
        }
    }
}

type Load<T> = std::result::Result<T, LoadError>;

#[derive(Clone, Debug)]
pub enum Morphism {
    Ext(Box<ExtMorphism>),
    Corings(CoringsMorphism),
}

/// Everything declared by a workspace file, in declaration order.
#[derive(Clone, Debug)]
pub struct Workspace {
    pub field: Field,
    pub algebras: Vec<(String, Arc<Algebra>)>,
    pub modules: Vec<(String, Arc<Bimodule>)>,
    pub corings: Vec<(String, Arc<Coring>)>,
    pub extensions: Vec<(String, RightExtension)>,
    pub morphisms: Vec<(String, Morphism)>,
}

fn find<'a, T>(items: &'a [(String, T)], name: &str) -> Option<&'a T> {
    items.iter().rev().find(|(n, _)| n == name).map(|(_, x)| x)
}

impl Workspace {
    pub fn new(field: Field) -> Workspace {
        Workspace {
            field,
            algebras: vec![("k".into(), Arc::new(Algebra::ground(field)))],
            modules: vec![],
            corings: vec![("k".into(), Arc::new(unit_coring(field)))],
            extensions: vec![],
            morphisms: vec![],
        }
    }

    pub fn algebra(&self, name: &str) -> Option<&Arc<Algebra>> {
        find(&self.algebras, name)
    }

    pub fn module(&self, name: &str) -> Option<&Arc<Bimodule>> {
        find(&self.modules, name)
    }

    pub fn coring(&self, name: &str) -> Option<&Arc<Coring>> {
        find(&self.corings, name)
    }

    pub fn extension(&self, name: &str) -> Option<&RightExtension> {
        find(&self.extensions, name)
    }

    pub fn morphism(&self, name: &str) -> Option<&Morphism> {
        find(&self.morphisms, name)
    }

    /// An extension or an extension morphism, both read as an [`ExtMorphism`].
    pub fn ext_morphism(&self, name: &str) -> Option<ExtMorphism> {
        match self.morphism(name) {
            Some(Morphism::Ext(m)) => Some((**m).clone()),
            Some(Morphism::Corings(_)) => None,
            None => self.extension(name).map(|e| ExtMorphism::from(e.clone())),
        }
    }

    pub fn corings_morphism(&self, name: &str) -> Option<&CoringsMorphism> {
        match self.morphism(name) {
            Some(Morphism::Corings(m)) => Some(m),
            _ => None,
        }
    }

    fn need<'a, T>(items: &'a [(String, T)], name: &str, context: &str) -> Load<&'a T> {
        find(items, name).ok_or_else(|| LoadError::UnknownReference {
            name: name.to_string(),
            context: context.to_string(),
        })
    }
}

/// Parses and builds a workspace.
pub fn parse_workspace(text: &str) -> Load<Workspace> {
    let doc: Value = serde_json::from_str(text).map_err(|e| LoadError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let top = doc
        .as_object()
        .ok_or_else(|| LoadError::syntax("workspace", "expected a JSON object"))?;
    for key in top.keys() {
        if !["field", "algebras", "modules", "corings", "extensions", "morphisms"].contains(&key.as_str()) {
            return Err(LoadError::syntax("workspace", format!("unknown top-level key `{key}`")));
        }
    }
    let field_text = top
        .get("field")
        .and_then(Value::as_str)
        .ok_or_else(|| LoadError::syntax("field", "expected a string such as \"Q\" or \"F_5\""))?;
    let field: Field = field_text.parse().map_err(|e: Error| LoadError::invalid("field", e))?;
    let mut ws = Workspace::new(field);
    let mut b = Builder { ws: &mut ws };
    for section in ["algebras", "modules", "corings", "extensions", "morphisms"] {
        let Some(entries) = top.get(section) else { continue };
        let entries = entries
            .as_object()
            .ok_or_else(|| LoadError::syntax(section, "expected an object of named declarations"))?;
        for (name, decl) in entries {
            match section {
                "algebras" => b.algebra(name, decl)?,
                "modules" => b.module(name, decl)?,
                "corings" => b.coring(name, decl)?,
                "extensions" => b.extension(name, decl)?,
                _ => b.morphism(name, decl)?,
            }
        }
    }
    Ok(ws)
}

struct Builder<'w> {
    ws: &'w mut Workspace,
}

fn obj<'v>(v: &'v Value, ctx: &str) -> Load<&'v Map<String, Value>> {
    v.as_object()
        .ok_or_else(|| LoadError::syntax(ctx, "expected an object"))
}

fn get<'v>(o: &'v Map<String, Value>, key: &str, ctx: &str) -> Load<&'v Value> {
    o.get(key)
        .ok_or_else(|| LoadError::syntax(ctx, format!("missing key `{key}`")))
}

fn get_str<'v>(o: &'v Map<String, Value>, key: &str, ctx: &str) -> Load<&'v str> {
    get(o, key, ctx)?
        .as_str()
        .ok_or_else(|| LoadError::syntax(ctx, format!("`{key}` must be a string")))
}

fn get_usize(o: &Map<String, Value>, key: &str, ctx: &str) -> Load<usize> {
    get(o, key, ctx)?
        .as_u64()
        .map(|n| n as usize)
        .ok_or_else(|| LoadError::syntax(ctx, format!("`{key}` must be a non-negative integer")))
}

fn name_pair<'v>(v: &'v Value, ctx: &str) -> Load<(&'v str, &'v str)> {
    match v.as_array().map(|a| a.as_slice()) {
        Some([Value::String(a), Value::String(b)]) => Ok((a, b)),
        _ => Err(LoadError::syntax(ctx, "expected a pair of names")),
    }
}

fn labels(v: &Value, ctx: &str) -> Load<Vec<String>> {
    v.as_array()
        .and_then(|a| {
            a.iter()
                .map(|x| x.as_str().map(String::from))
                .collect::<Option<Vec<_>>>()
        })
        .ok_or_else(|| LoadError::syntax(ctx, "labels must be an array of strings"))
}

fn scalar(field: Field, v: &Value, ctx: &str) -> Load<Scalar> {
    match v {
        Value::String(s) => field.parse(s).map_err(|e| LoadError::syntax(ctx, e.to_string())),
        Value::Number(n) => n
            .as_i64()
            .map(|n| field.from_i64(n))
            .ok_or_else(|| LoadError::syntax(ctx, format!("scalar {n} is not an integer; write fractions as strings"))),
        _ => Err(LoadError::syntax(
            ctx,
            "scalars are strings such as \"3/4\" or integers",
        )),
    }
}

fn vector(field: Field, v: &Value, ctx: &str) -> Load<Vec<Scalar>> {
    v.as_array()
        .ok_or_else(|| LoadError::syntax(ctx, "expected an array of scalars"))?
        .iter()
        .map(|x| scalar(field, x, ctx))
        .collect()
}

/// A matrix with the given number of rows and columns.
fn matrix(field: Field, v: &Value, rows: usize, cols: usize, ctx: &str) -> Load<Mat> {
    let arr = v
        .as_array()
        .ok_or_else(|| LoadError::syntax(ctx, "expected an array of rows"))?;
    if arr.len() != rows {
        return Err(LoadError::invalid(
            ctx,
            format!("expected {rows} rows, found {}", arr.len()),
        ));
    }
    let data = arr
        .iter()
        .map(|r| {
            let r = vector(field, r, ctx)?;
            if r.len() != cols {
                return Err(LoadError::invalid(
                    ctx,
                    format!("expected rows of length {cols}, found {}", r.len()),
                ));
            }
            Ok(r)
        })
        .collect::<Load<Vec<_>>>()?;
    Mat::from_rows(field, cols, data).map_err(|e| LoadError::invalid(ctx, e))
}

fn matrices(field: Field, v: &Value, count: usize, n: usize, ctx: &str) -> Load<Vec<Mat>> {
    let arr = v
        .as_array()
        .ok_or_else(|| LoadError::syntax(ctx, "expected an array of matrices"))?;
    if arr.len() != count {
        return Err(LoadError::invalid(
            ctx,
            format!("expected {count} matrices, found {}", arr.len()),
        ));
    }
    arr.iter().map(|m| matrix(field, m, n, n, ctx)).collect()
}

fn group_table(kind: &str, ctx: &str) -> Load<(Vec<Vec<usize>>, Vec<&'static str>)> {
    match kind {
        "C2" => Ok((cyclic2_table(), vec!["e", "g"])),
        "V4" | "C2xC2" => Ok((klein_table(), vec!["e", "a", "b", "ab"])),
        other => Err(LoadError::invalid(
            ctx,
            format!("unknown group `{other}`; expected C2 or V4"),
        )),
    }
}

impl Builder<'_> {
    fn field(&self) -> Field {
        self.ws.field
    }

    fn algebra_ref(&self, name: &str, ctx: &str) -> Load<Arc<Algebra>> {
        Workspace::need(&self.ws.algebras, name, ctx).cloned()
    }

    fn coring_ref(&self, name: &str, ctx: &str) -> Load<Arc<Coring>> {
        Workspace::need(&self.ws.corings, name, ctx).cloned()
    }

    fn module_ref(&self, name: &str, ctx: &str) -> Load<Arc<Bimodule>> {
        Workspace::need(&self.ws.modules, name, ctx).cloned()
    }

    fn ext_ref(&self, name: &str, ctx: &str) -> Load<ExtMorphism> {
        self.ws.ext_morphism(name).ok_or_else(|| LoadError::UnknownReference {
            name: name.to_string(),
            context: ctx.to_string(),
        })
    }

    fn corings_ref(&self, name: &str, ctx: &str) -> Load<CoringsMorphism> {
        self.ws
            .corings_morphism(name)
            .cloned()
            .ok_or_else(|| LoadError::UnknownReference {
                name: name.to_string(),
                context: ctx.to_string(),
            })
    }

    /// `{"map": [[..]]}` against named source and target algebras, or `"identity"`.
    /// Multiplicativity is checked only when `validate` is set.
    fn algebra_map(
        &self,
        v: &Value,
        source: &Arc<Algebra>,
        target: &Arc<Algebra>,
        validate: bool,
        ctx: &str,
    ) -> Load<AlgebraMorphism> {
        let map = match v {
            Value::String(s) if s == "identity" => Mat::identity(self.field(), source.dim()),
            _ => matrix(
                self.field(),
                get(obj(v, ctx)?, "map", ctx)?,
                source.dim(),
                target.dim(),
                ctx,
            )?,
        };
        let m = AlgebraMorphism::new(source.clone(), target.clone(), map).map_err(|e| LoadError::invalid(ctx, e))?;
        if validate {
            m.check().map_err(|v| LoadError::invalid(ctx, v))?;
        }
        Ok(m)
    }

    fn algebra(&mut self, name: &str, decl: &Value) -> Load<()> {
        let ctx = format!("algebras.{name}");
        let o = obj(decl, &ctx)?;
        let f = self.field();
        let a = if let Some(fx) = o.get("fixture") {
            let fx = obj(fx, &ctx)?;
            match get_str(fx, "kind", &ctx)? {
                "ground" => Algebra::ground(f),
                "dual_numbers" => Algebra::dual_numbers(f),
                "truncated_polynomial" => Algebra::truncated_polynomial(f, get_usize(fx, "n", &ctx)?.max(1)),
                "upper_triangular" => Algebra::upper_triangular(f),
                "group" => {
                    let (table, names) = group_table(get_str(fx, "group", &ctx)?, &ctx)?;
                    Algebra::group_algebra(f, &table, &names).map_err(|e| LoadError::invalid(&ctx, e))?
                }
                other => return Err(LoadError::invalid(&ctx, format!("unknown algebra fixture `{other}`"))),
            }
        } else {
            let names = labels(get(o, "labels", &ctx)?, &ctx)?;
            let n = names.len();
            let unit = vector(f, get(o, "unit", &ctx)?, &ctx)?;
            let table = matrix(f, get(o, "table", &ctx)?, n * n, n, &ctx)?;
            Algebra::new(f, table, unit, names).map_err(|e| LoadError::invalid(&ctx, e))?
        };
        a.check().map_err(|v| LoadError::invalid(&ctx, v))?;
        self.ws.algebras.push((name.to_string(), Arc::new(a)));
        Ok(())
    }

    fn module(&mut self, name: &str, decl: &Value) -> Load<()> {
        let ctx = format!("modules.{name}");
        let o = obj(decl, &ctx)?;
        let m = if let Some(a) = o.get("regular") {
            let a = a
                .as_str()
                .ok_or_else(|| LoadError::syntax(&ctx, "`regular` names an algebra"))?;
            Bimodule::regular(self.algebra_ref(a, &ctx)?)
        } else {
            let left = self.algebra_ref(get_str(o, "left", &ctx)?, &ctx)?;
            let right = self.algebra_ref(get_str(o, "right", &ctx)?, &ctx)?;
            let names = labels(get(o, "labels", &ctx)?, &ctx)?;
            let n = names.len();
            let f = self.field();
            let la = matrices(f, get(o, "left_action", &ctx)?, left.dim(), n, &ctx)?;
            let ra = matrices(f, get(o, "right_action", &ctx)?, right.dim(), n, &ctx)?;
            Bimodule::new(left, right, la, ra, names).map_err(|e| LoadError::invalid(&ctx, e))?
        };
        m.check().map_err(|v| LoadError::invalid(&ctx, v))?;
        self.ws.modules.push((name.to_string(), Arc::new(m)));
        Ok(())
    }

    fn coring(&mut self, name: &str, decl: &Value) -> Load<()> {
        let ctx = format!("corings.{name}");
        let o = obj(decl, &ctx)?;
        let f = self.field();
        let invalid = |e: Error| LoadError::invalid(&ctx, e);
        let mut c = if let Some(fx) = o.get("fixture") {
            let fx = obj(fx, &ctx)?;
            match get_str(fx, "kind", &ctx)? {
                "unit" => unit_coring(f),
                "trivial" => Coring::trivial(self.algebra_ref(get_str(fx, "algebra", &ctx)?, &ctx)?),
                "matrix_coalgebra" => matrix_coalgebra(f, get_usize(fx, "n", &ctx)?),
                "grouplike" => {
                    let (table, names) = group_table(get_str(fx, "group", &ctx)?, &ctx)?;
                    grouplike_coalgebra(f, &table, &names).map_err(invalid)?
                }
                "sweedler" => {
                    let a = self.algebra_ref(get_str(fx, "algebra", &ctx)?, &ctx)?;
                    let b = match fx.get("subalgebra") {
                        Some(b) => {
                            let b = b
                                .as_str()
                                .ok_or_else(|| LoadError::syntax(&ctx, "`subalgebra` is a name"))?;
                            self.algebra_ref(b, &ctx)?
                        }
                        None => Arc::new(Algebra::ground(f)),
                    };
                    let iota = match fx.get("inclusion") {
                        Some(v) => self.algebra_map(v, &b, &a, true, &ctx)?,
                        None if b.is_ground() => {
                            let unit = Mat::from_rows(f, a.dim(), vec![a.unit().to_vec()]).map_err(invalid)?;
                            AlgebraMorphism::new(b, a, unit).map_err(invalid)?
                        }
                        None => return Err(LoadError::syntax(&ctx, "a subalgebra needs an `inclusion`")),
                    };
                    sweedler_coring(&iota).map_err(invalid)?
                }
                other => return Err(LoadError::invalid(&ctx, format!("unknown coring fixture `{other}`"))),
            }
        } else if let Some(pair) = o.get("tensor") {
            let (a, b) = name_pair(pair, &ctx)?;
            tensor_coring(&*self.coring_ref(a, &ctx)?, &*self.coring_ref(b, &ctx)?).map_err(invalid)?
        } else {
            let carrier = self.module_ref(get_str(o, "carrier", &ctx)?, &ctx)?;
            let n = carrier.dim();
            let lift = matrix(f, get(o, "comul", &ctx)?, n, n * n, &ctx)?;
            let counit = matrix(f, get(o, "counit", &ctx)?, n, carrier.left_alg().dim(), &ctx)?;
            Coring::new(carrier, lift, counit).map_err(invalid)?
        };
        // explicit matrices override those of a fixture or derived coring
        if o.contains_key("fixture") || o.contains_key("tensor") {
            let n = c.dim();
            let lift = match o.get("comul") {
                Some(v) => matrix(f, v, n, n * n, &ctx)?,
                None => c.comul_lift().clone(),
            };
            let counit = match o.get("counit") {
                Some(v) => matrix(f, v, n, c.base().dim(), &ctx)?,
                None => c.counit().clone(),
            };
            if o.contains_key("comul") || o.contains_key("counit") {
                c = Coring::new(c.carrier().clone(), lift, counit).map_err(invalid)?;
            }
        }
        self.ws.corings.push((name.to_string(), Arc::new(c)));
        Ok(())
    }

    /// The shared shape of extensions and extension morphisms.
    fn ext_data(&self, o: &Map<String, Value>, ctx: &str) -> Load<ExtMorphism> {
        let invalid = |e: Error| LoadError::invalid(ctx, e);
        if let Some(fx) = o.get("fixture") {
            let fx = obj(fx, ctx)?;
            let c = self.coring_ref(get_str(fx, "coring", ctx)?, ctx)?;
            return Ok(match get_str(fx, "kind", ctx)? {
                "identity" | "regular" => ext_identity(c),
                "to_unit" => ext_to_unit(c),
                "counit" => ext_counit(c),
                "grouplike" => {
                    let g = get_str(fx, "element", ctx)?;
                    let idx = c
                        .labels()
                        .iter()
                        .position(|l| l == g)
                        .ok_or_else(|| LoadError::UnknownReference {
                            name: g.to_string(),
                            context: ctx.to_string(),
                        })?;
                    ext_grouplike(c, idx).map_err(invalid)?
                }
                other => return Err(LoadError::invalid(ctx, format!("unknown extension fixture `{other}`"))),
            });
        }
        if let Some(pair) = o.get("tensor") {
            let (a, b) = name_pair(pair, ctx)?;
            return ext_tensor_morphisms(&self.ext_ref(a, ctx)?, &self.ext_ref(b, ctx)?).map_err(invalid);
        }
        if let Some(pair) = o.get("compose") {
            let (g, f) = name_pair(pair, ctx)?;
            return ext_compose(&self.ext_ref(g, ctx)?, &self.ext_ref(f, ctx)?).map_err(invalid);
        }
        let c = self.coring_ref(get_str(o, "source", ctx)?, ctx)?;
        let d = self.coring_ref(get_str(o, "target", ctx)?, ctx)?;
        let f = self.field();
        if let Some(phi) = o.get("coalgebra_map") {
            let phi = matrix(f, phi, c.dim(), d.dim(), ctx)?;
            return ExtMorphism::from_coalgebra_map(c, d, &phi).map_err(invalid);
        }
        let acts = matrices(f, get(o, "right_action", ctx)?, d.base().dim(), c.dim(), ctx)?;
        let lift = matrix(f, get(o, "coaction", ctx)?, c.dim(), c.dim() * d.dim(), ctx)?;
        let m = ExtMorphism::new(c, d, acts, lift).map_err(invalid)?;
        m.extension()
            .check_bimodule()
            .map_err(|v| LoadError::invalid(ctx, Error::NotABimodule(v)))?;
        Ok(m)
    }

    fn extension(&mut self, name: &str, decl: &Value) -> Load<()> {
        let ctx = format!("extensions.{name}");
        let e = self.ext_data(obj(decl, &ctx)?, &ctx)?;
        self.ws.extensions.push((name.to_string(), e.extension().clone()));
        Ok(())
    }

    fn morphism(&mut self, name: &str, decl: &Value) -> Load<()> {
        let ctx = format!("morphisms.{name}");
        let o = obj(decl, &ctx)?;
        let m = match get_str(o, "kind", &ctx)? {
            "ext" => Morphism::Ext(Box::new(self.ext_data(o, &ctx)?)),
            "corings" => Morphism::Corings(self.corings_data(o, &ctx)?),
            other => return Err(LoadError::syntax(&ctx, format!("unknown morphism kind `{other}`"))),
        };
        self.ws.morphisms.push((name.to_string(), m));
        Ok(())
    }

    fn corings_data(&self, o: &Map<String, Value>, ctx: &str) -> Load<CoringsMorphism> {
        let invalid = |e: Error| LoadError::invalid(ctx, e);
        if let Some(fx) = o.get("fixture") {
            let fx = obj(fx, ctx)?;
            let c = self.coring_ref(get_str(fx, "coring", ctx)?, ctx)?;
            return match get_str(fx, "kind", ctx)? {
                "identity" => Ok(CoringsMorphism::identity(c)),
                "counit" => Ok(CoringsMorphism::counit(c)),
                other => Err(LoadError::invalid(ctx, format!("unknown morphism fixture `{other}`"))),
            };
        }
        if let Some(pair) = o.get("tensor") {
            let (a, b) = name_pair(pair, ctx)?;
            return corings_tensor_morphisms(&self.corings_ref(a, ctx)?, &self.corings_ref(b, ctx)?).map_err(invalid);
        }
        if let Some(pair) = o.get("compose") {
            let (g, f) = name_pair(pair, ctx)?;
            return corings_compose(&self.corings_ref(g, ctx)?, &self.corings_ref(f, ctx)?).map_err(invalid);
        }
        let c = self.coring_ref(get_str(o, "source", ctx)?, ctx)?;
        let d = self.coring_ref(get_str(o, "target", ctx)?, ctx)?;
        let phi = matrix(self.field(), get(o, "phi", ctx)?, c.dim(), d.dim(), ctx)?;
        let varphi = match o.get("varphi") {
            Some(v) => self.algebra_map(v, c.base(), d.base(), false, ctx)?,
            None => self.algebra_map(&Value::from("identity"), c.base(), d.base(), false, ctx)?,
        };
        CoringsMorphism::new(c, d, phi, varphi).map_err(invalid)
    }
}

fn scalars_json(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(x.to_string())).collect())
}

fn mat_json(m: &Mat) -> Value {
    Value::Array((0..m.rows()).map(|i| scalars_json(m.row(i))).collect())
}

/// Standalone workspace documents for constructed objects, with every
/// matrix written out explicitly.
pub struct Dump {
    field: Field,
    algebras: Map<String, Value>,
    modules: Map<String, Value>,
    corings: Map<String, Value>,
    extensions: Map<String, Value>,
}

impl Dump {
    pub fn new(field: Field) -> Dump {
        Dump {
            field,
            algebras: Map::new(),
            modules: Map::new(),
            corings: Map::new(),
            extensions: Map::new(),
        }
    }

    fn algebra(&mut self, name: &str, a: &Algebra) -> String {
        if a.is_ground() {
            return "k".into();
        }
        self.algebras.insert(
            name.into(),
            json!({"labels": a.labels(), "unit": scalars_json(a.unit()), "table": mat_json(a.table())}),
        );
        name.into()
    }

    fn module(&mut self, name: &str, m: &Bimodule) -> String {
        let left = self.algebra(&format!("{name}.left"), m.left_alg());
        let right = if m.right_alg() == m.left_alg() {
            left.clone()
        } else {
            self.algebra(&format!("{name}.right"), m.right_alg())
        };
        self.modules.insert(
            name.into(),
            json!({
                "left": left,
                "right": right,
                "labels": m.labels(),
                "left_action": m.left_acts().iter().map(mat_json).collect::<Vec<_>>(),
                "right_action": m.right_acts().iter().map(mat_json).collect::<Vec<_>>(),
            }),
        );
        name.into()
    }

    pub fn coring(&mut self, name: &str, c: &Coring) -> String {
        let carrier = self.module(&format!("{name}.carrier"), c.carrier());
        self.corings.insert(
            name.into(),
            json!({"carrier": carrier, "comul": mat_json(c.comul_lift()), "counit": mat_json(c.counit())}),
        );
        name.into()
    }

    pub fn extension(&mut self, name: &str, e: &RightExtension) -> String {
        let c = self.coring(&format!("{name}.source"), e.c());
        let d = self.coring(&format!("{name}.target"), e.d());
        self.extensions.insert(
            name.into(),
            json!({
                "source": c,
                "target": d,
                "right_action": e.right_acts().iter().map(mat_json).collect::<Vec<_>>(),
                "coaction": mat_json(e.coact_lift()),
            }),
        );
        name.into()
    }

    pub fn to_json(&self) -> String {
        let mut top = Map::new();
        top.insert("field".into(), Value::String(self.field.to_string()));
        for (key, section) in [
            ("algebras", &self.algebras),
            ("modules", &self.modules),
            ("corings", &self.corings),
            ("extensions", &self.extensions),
        ] {
            if !section.is_empty() {
                top.insert(key.into(), Value::Object(section.clone()));
            }
        }
        let mut out = serde_json::to_string_pretty(&Value::Object(top)).expect("json values serialize");
        out.push('\n');
        out
    }
}
