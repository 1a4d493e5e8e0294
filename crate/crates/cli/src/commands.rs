use std::collections::BTreeSet;
use std::path::Path;
use std::sync::Arc;

use fuzzcover::{
    build_cover, cover_report, enumerate_fuzzy_subgroups_chain, enumerate_fuzzy_subgroups_filter,
    hclass_level_isomorphism, omega_morphism, omega_object, verify_embedding, Budget, CoverMonoid,
    ErrorKind, FiniteInverseMonoid, FuzzySubgroup, MembershipValue, OmegaObject, ValueGrid,
};
use serde_json::{json, Value};

use crate::workspace::{parse_workspace, Claim, Workspace};
use crate::{
    Cli, Command, Format, Outcome, Section, EXIT_BUDGET, EXIT_OK, EXIT_PARSE, EXIT_THEOREM,
    EXIT_VALIDATION, SCHEMA_VERSION,
};

/// An error that stops the command before it produces a report.
struct Abort {
    code: i32,
    category: &'static str,
    message: String,
}

fn exit_code(e: &fuzzcover::Error) -> i32 {
    match e.kind() {
        ErrorKind::Validation => EXIT_VALIDATION,
        ErrorKind::Budget => EXIT_BUDGET,
        ErrorKind::Theorem => EXIT_THEOREM,
    }
}

fn category(code: i32) -> &'static str {
    match code {
        EXIT_PARSE => "parse",
        EXIT_VALIDATION => "validation",
        EXIT_BUDGET => "budget",
        _ => "theorem",
    }
}

impl From<fuzzcover::Error> for Abort {
    fn from(e: fuzzcover::Error) -> Self {
        let code = exit_code(&e);
        Abort {
            code,
            category: category(code),
            message: e.to_string(),
        }
    }
}

impl From<fuzzcover::BudgetExceeded> for Abort {
    fn from(e: fuzzcover::BudgetExceeded) -> Self {
        fuzzcover::Error::from(e).into()
    }
}

#[derive(Default)]
struct Report {
    text: String,
    results: Vec<Value>,
    code: i32,
}

impl Report {
    fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    /// Keeps the first failure's exit code.
    fn fail(&mut self, code: i32) {
        if self.code == EXIT_OK {
            self.code = code;
        }
    }
}

fn load(path: &Path) -> Result<Workspace, Abort> {
    let text = std::fs::read_to_string(path).map_err(|e| Abort {
        code: EXIT_PARSE,
        category: "io",
        message: format!("{}: {e}", path.display()),
    })?;
    parse_workspace(&text).map_err(|e| Abort {
        code: e.exit_code(),
        category: e.category(),
        message: format!("{}:{e}", path.display()),
    })
}

pub(crate) fn execute(cli: &Cli) -> Outcome {
    let budget = Budget::new(cli.budget);
    let (name, result) = match &cli.command {
        Command::Check { file } => ("check", check(file)),
        Command::Cover { file, report } => {
            let sections = match report {
                Some(list) => list.iter().copied().collect(),
                None => ALL_SECTIONS.iter().copied().collect(),
            };
            ("cover", cover(file, &sections))
        }
        Command::Levels { file } => ("levels", levels(file)),
        Command::Embed {
            source,
            target,
            grid,
        } => ("embed", embed(source, target.as_deref(), *grid, budget)),
        Command::Enumerate { file, grid } => ("enumerate", enumerate(file, *grid, budget)),
    };
    match (result, cli.format) {
        (Ok(report), Format::Text) => Outcome {
            stdout: report.text,
            stderr: String::new(),
            code: report.code,
        },
        (Ok(report), Format::Machine) => Outcome {
            stdout: document(json!({
                "schema_version": SCHEMA_VERSION,
                "command": name,
                "ok": report.code == EXIT_OK,
                "exit_code": report.code,
                "results": report.results,
            })),
            stderr: String::new(),
            code: report.code,
        },
        (Err(abort), format) => Outcome {
            stdout: match format {
                Format::Text => String::new(),
                Format::Machine => document(json!({
                    "schema_version": SCHEMA_VERSION,
                    "command": name,
                    "ok": false,
                    "exit_code": abort.code,
                    "error": { "category": abort.category, "message": abort.message },
                })),
            },
            stderr: format!("error: {}\n", abort.message),
            code: abort.code,
        },
    }
}

fn document(value: Value) -> String {
    let mut s = serde_json::to_string_pretty(&value).expect("JSON values always serialize");
    s.push('\n');
    s
}

const ALL_SECTIONS: [Section; 7] = [
    Section::Elements,
    Section::Table,
    Section::Idempotents,
    Section::Order,
    Section::Sigma,
    Section::Green,
    Section::Levels,
];

fn names(m: &FiniteInverseMonoid, xs: &[usize]) -> Vec<String> {
    xs.iter().map(|&x| m.name(x).to_string()).collect()
}

fn format_chain(values: &[MembershipValue]) -> String {
    let parts: Vec<String> = values.iter().map(ToString::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

fn check(file: &Path) -> Result<Report, Abort> {
    let ws = load(file)?;
    let mut r = Report::default();
    for g in &ws.groups {
        r.line(format!("group {}: OK (order {})", g.name, g.group.order()));
        r.results
            .push(json!({"kind": "group", "name": g.name, "ok": true, "order": g.group.order()}));
    }
    for f in &ws.fuzzy {
        let facts = f.fuzzy.derived_facts().and_then(|facts| {
            f.fuzzy.as_dual_premorphism()?;
            Ok(facts)
        });
        match facts {
            Ok(facts) => {
                r.line(format!("fuzzy {}: OK (axioms, derived facts)", f.name));
                r.results.push(json!({
                    "kind": "fuzzy", "name": f.name, "group": f.group, "ok": true,
                    "identity_value": facts.identity_value.to_string(),
                    "chain": f.fuzzy.chain().iter().map(ToString::to_string).collect::<Vec<_>>(),
                }));
            }
            Err(e) => {
                r.fail(exit_code(&e));
                r.line(format!("fuzzy {}: FAIL ({e})", f.name));
                r.results.push(
                    json!({"kind": "fuzzy", "name": f.name, "ok": false, "witness": e.to_string()}),
                );
            }
        }
    }
    for m in &ws.monoids {
        let failures: Vec<String> = m
            .claims
            .iter()
            .filter_map(|&c| claim_witness(&m.monoid, c))
            .collect();
        let mut detail = format!("inverse monoid, order {}", m.monoid.order());
        for c in &m.claims {
            detail.push_str(", ");
            detail.push_str(c.keyword());
        }
        if failures.is_empty() {
            r.line(format!("monoid {}: OK ({detail})", m.name));
        } else {
            r.fail(EXIT_THEOREM);
            r.line(format!("monoid {}: FAIL ({})", m.name, failures.join("; ")));
        }
        r.results.push(json!({
            "kind": "monoid", "name": m.name, "ok": failures.is_empty(), "order": m.monoid.order(),
            "claims": m.claims.iter().map(|c| c.keyword()).collect::<Vec<_>>(), "failures": failures,
        }));
    }
    for m in &ws.morphisms {
        let image = (|| {
            let source = omega_object(&ws.fuzzy(&m.source).unwrap().fuzzy)?;
            let target = omega_object(&ws.fuzzy(&m.target).unwrap().fuzzy)?;
            omega_morphism(&m.morphism, &source, &target)
        })();
        match image {
            Ok(c) => {
                r.line(format!(
                    "morphism {}: OK (FG morphism, Ω image is an FC morphism)",
                    m.name
                ));
                r.results.push(json!({
                    "kind": "morphism", "name": m.name, "ok": true,
                    "source": m.source, "target": m.target, "omega": c.describe(),
                }));
            }
            Err(e) => {
                r.fail(exit_code(&e));
                r.line(format!("morphism {}: FAIL ({e})", m.name));
                r.results.push(json!({"kind": "morphism", "name": m.name, "ok": false, "witness": e.to_string()}));
            }
        }
    }
    Ok(r)
}

/// Why a declared property fails, if it does.
fn claim_witness(m: &FiniteInverseMonoid, claim: Claim) -> Option<String> {
    match claim {
        Claim::Clifford => m.idempotents().iter().find_map(|&e| {
            m.elements().find(|&x| m.mul(e, x) != m.mul(x, e)).map(|x| {
                format!(
                    "claimed clifford, but {e}*{x} != {x}*{e}",
                    e = m.name(e),
                    x = m.name(x)
                )
            })
        }),
        Claim::FInverse => {
            let (_, maxima) = m.is_f_inverse();
            maxima.iter().position(Option::is_none).map(|class| {
                format!(
                    "claimed f-inverse, but the σ-class {} has no greatest element",
                    m.format_subset(m.sigma().class(class))
                )
            })
        }
    }
}

fn table_lines(m: &FiniteInverseMonoid) -> Vec<String> {
    let width = m
        .names()
        .iter()
        .map(|n| n.chars().count())
        .max()
        .unwrap_or(1);
    let pad = |s: &str| format!("{s:<width$}");
    let mut out = vec![format!(
        "  {}  {}",
        pad("*"),
        m.names()
            .iter()
            .map(|n| pad(n))
            .collect::<Vec<_>>()
            .join(" ")
    )];
    for x in m.elements() {
        let row: Vec<String> = m.elements().map(|y| pad(m.name(m.mul(x, y)))).collect();
        out.push(
            format!("  {}  {}", pad(m.name(x)), row.join(" "))
                .trim_end()
                .to_string(),
        );
    }
    out[0] = out[0].trim_end().to_string();
    out
}

fn level_section(c: &CoverMonoid, r: &mut Report) -> Result<Vec<Value>, Abort> {
    let f = c.source();
    let (m, g) = (c.monoid(), c.group());
    let mut out = Vec::new();
    for &u in f.chain() {
        match hclass_level_isomorphism(c, u) {
            Ok(iso) => {
                r.line(format!(
                    "level {u}: μ_u = {}, H_{} = {} ≅ μ_u",
                    g.format_subset(&iso.level_subset),
                    m.name(iso.idempotent),
                    m.format_subset(&iso.h_class)
                ));
                out.push(json!({
                    "value": u.to_string(),
                    "idempotent": m.name(iso.idempotent),
                    "level_subset": iso.level_subset.iter().map(|&x| g.name(x)).collect::<Vec<_>>(),
                    "h_class": names(m, &iso.h_class),
                    "isomorphism": true,
                }));
            }
            Err(e) => {
                r.fail(exit_code(&e));
                r.line(format!("level {u}: FAIL ({e})"));
                out.push(
                    json!({"value": u.to_string(), "isomorphism": false, "witness": e.to_string()}),
                );
            }
        }
    }
    Ok(out)
}

fn cover(file: &Path, sections: &BTreeSet<Section>) -> Result<Report, Abort> {
    let ws = load(file)?;
    let mut r = Report::default();
    for (i, decl) in ws.fuzzy.iter().enumerate() {
        if i > 0 {
            r.line("");
        }
        let f = &decl.fuzzy;
        let built = build_cover(f).and_then(|c| {
            let report = cover_report(&c)?;
            Ok((c, report))
        });
        let (c, report) = match built {
            Ok(x) => x,
            Err(e) => {
                r.fail(exit_code(&e));
                r.line(format!("cover of {}: FAIL ({e})", decl.name));
                r.results
                    .push(json!({"fuzzy": decl.name, "ok": false, "witness": e.to_string()}));
                continue;
            }
        };
        let m = c.monoid();
        r.line(format!(
            "cover of {} on {}: {} elements over U = {}",
            decl.name,
            decl.group,
            m.order(),
            format_chain(f.chain())
        ));
        let mut doc = serde_json::Map::new();
        doc.insert("fuzzy".into(), json!(decl.name));
        doc.insert("group".into(), json!(decl.group));
        doc.insert("ok".into(), json!(true));
        doc.insert(
            "chain".into(),
            json!(f
                .chain()
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()),
        );
        for section in sections {
            match section {
                Section::Elements => {
                    r.line(format!("elements: {}", m.names().join(" ")));
                    doc.insert("elements".into(), json!(m.names()));
                }
                Section::Table => {
                    r.line("table:");
                    for l in table_lines(m) {
                        r.line(l);
                    }
                    let rows: Vec<Vec<&str>> = m
                        .elements()
                        .map(|x| m.elements().map(|y| m.name(m.mul(x, y))).collect())
                        .collect();
                    doc.insert("table".into(), json!(rows));
                }
                Section::Idempotents => {
                    r.line(format!(
                        "idempotents: {}",
                        names(m, &report.idempotents).join(" ")
                    ));
                    r.line(format!("unit: {}", m.name(report.unit)));
                    doc.insert("idempotents".into(), json!(names(m, &report.idempotents)));
                    doc.insert("unit".into(), json!(m.name(report.unit)));
                }
                Section::Order => {
                    let pairs: Vec<String> = report
                        .order
                        .iter()
                        .map(|&(a, b)| format!("{} < {}", m.name(a), m.name(b)))
                        .collect();
                    r.line(format!(
                        "order: {}",
                        if pairs.is_empty() {
                            "discrete".to_string()
                        } else {
                            pairs.join(", ")
                        }
                    ));
                    let json_pairs: Vec<[&str; 2]> = report
                        .order
                        .iter()
                        .map(|&(a, b)| [m.name(a), m.name(b)])
                        .collect();
                    doc.insert("order".into(), json!(json_pairs));
                }
                Section::Sigma => {
                    let classes: Vec<String> = report
                        .sigma_classes
                        .iter()
                        .map(|s| {
                            format!("{} max {}", m.format_subset(&s.members), m.name(s.maximum))
                        })
                        .collect();
                    r.line(format!("sigma: {}", classes.join("; ")));
                    r.line(format!(
                        "sigma quotient: ≅ {} via x ↦ [(μ(x),x)]",
                        decl.group
                    ));
                    let json_classes: Vec<Value> = report
                        .sigma_classes
                        .iter()
                        .map(|s| json!({"members": names(m, &s.members), "maximum": m.name(s.maximum)}))
                        .collect();
                    doc.insert("sigma".into(), json!(json_classes));
                }
                Section::Green => {
                    let mut green = serde_json::Map::new();
                    for (label, p) in [("R", m.green_r()), ("L", m.green_l()), ("H", m.green_h())] {
                        let classes: Vec<String> =
                            p.classes().iter().map(|c| m.format_subset(c)).collect();
                        r.line(format!("green {label}: {}", classes.join(" ")));
                        let json_classes: Vec<Vec<String>> =
                            p.classes().iter().map(|c| names(m, c)).collect();
                        green.insert(label.to_lowercase(), json!(json_classes));
                    }
                    doc.insert("green".into(), Value::Object(green));
                }
                Section::Levels => {
                    let levels = level_section(&c, &mut r)?;
                    doc.insert("levels".into(), json!(levels));
                }
            }
        }
        r.results.push(Value::Object(doc));
    }
    Ok(r)
}

fn levels(file: &Path) -> Result<Report, Abort> {
    let ws = load(file)?;
    let mut r = Report::default();
    for decl in &ws.fuzzy {
        r.line(format!("levels of {} on {}", decl.name, decl.group));
        match build_cover(&decl.fuzzy) {
            Ok(c) => {
                let levels = level_section(&c, &mut r)?;
                r.results
                    .push(json!({"fuzzy": decl.name, "levels": levels}));
            }
            Err(e) => {
                r.fail(exit_code(&e));
                r.line(format!("cover of {}: FAIL ({e})", decl.name));
                r.results
                    .push(json!({"fuzzy": decl.name, "ok": false, "witness": e.to_string()}));
            }
        }
    }
    Ok(r)
}

struct Object {
    label: String,
    omega: OmegaObject,
}

fn objects(list: Vec<(String, Arc<FuzzySubgroup>)>) -> Result<Vec<Object>, Abort> {
    list.into_iter()
        .map(|(label, f)| {
            Ok(Object {
                label,
                omega: omega_object(&f)?,
            })
        })
        .collect()
}

fn ok(flag: bool) -> &'static str {
    if flag {
        "OK"
    } else {
        "FAIL"
    }
}

#[derive(Default)]
struct Tally {
    pairs: usize,
    homs: usize,
    faithful: bool,
    full: bool,
}

fn hom_counts(fg: usize, fc: usize) -> String {
    if fg == fc {
        format!("hom-sets 𝔉𝔊=𝔉ℭ={fg}")
    } else {
        format!("hom-sets 𝔉𝔊={fg}, 𝔉ℭ={fc}")
    }
}

fn embed_pairs(
    sources: &[Object],
    targets: &[Object],
    budget: Budget,
    verbose: bool,
    r: &mut Report,
) -> Result<Tally, Abort> {
    let mut tally = Tally {
        faithful: true,
        full: true,
        ..Tally::default()
    };
    for a in sources {
        for b in targets {
            let cert = verify_embedding(&a.omega, &b.omega, budget)?;
            tally.pairs += 1;
            tally.homs += cert.fg_count();
            tally.faithful &= cert.faithful;
            tally.full &= cert.full;
            let holds = cert.holds() && cert.fg_count() == cert.fc_count();
            let mut line = format!(
                "{} -> {}: faithful: {}, full: {}, {}",
                a.label,
                b.label,
                ok(cert.faithful),
                ok(cert.full),
                hom_counts(cert.fg_count(), cert.fc_count())
            );
            if !holds {
                r.fail(EXIT_THEOREM);
                line.push_str(&format!(
                    " (counterexample: {})",
                    cert.counterexample
                        .as_deref()
                        .unwrap_or("hom-set sizes differ")
                ));
            }
            if verbose || !holds {
                r.line(if verbose { line } else { format!("  {line}") });
            }
            r.results.push(json!({
                "source": a.label,
                "target": b.label,
                "fg_count": cert.fg_count(),
                "fc_count": cert.fc_count(),
                "faithful": cert.faithful,
                "full": cert.full,
                "identities_preserved": cert.identities_preserved,
                "functoriality_checks": cert.functoriality_checks,
                "bijection": cert.bijection,
                "counterexample": cert.counterexample,
            }));
        }
    }
    Ok(tally)
}

fn grid_objects(
    ws: &Workspace,
    grid: &ValueGrid,
    budget: Budget,
) -> Result<Vec<(String, Vec<Object>)>, Abort> {
    ws.groups
        .iter()
        .map(|g| {
            let list = enumerate_fuzzy_subgroups_filter(&g.group, grid, budget)?
                .into_iter()
                .map(|f| {
                    let values: Vec<String> = g
                        .group
                        .elements()
                        .map(|x| format!("{}={}", g.group.name(x), f.mu(x)))
                        .collect();
                    (format!("{}{{{}}}", g.name, values.join(",")), Arc::new(f))
                })
                .collect();
            Ok((g.name.clone(), objects(list)?))
        })
        .collect()
}

fn embed(
    source: &Path,
    target: Option<&Path>,
    grid: Option<u8>,
    budget: Budget,
) -> Result<Report, Abort> {
    let ws1 = load(source)?;
    let ws2 = match target {
        Some(path) => load(path)?,
        None => ws1.clone(),
    };
    let mut r = Report::default();
    let mut total = Tally {
        faithful: true,
        full: true,
        ..Tally::default()
    };
    match grid {
        None => {
            let declared = |ws: &Workspace| {
                objects(
                    ws.fuzzy
                        .iter()
                        .map(|d| (d.name.clone(), Arc::clone(&d.fuzzy)))
                        .collect(),
                )
            };
            let (sources, targets) = (declared(&ws1)?, declared(&ws2)?);
            total = embed_pairs(&sources, &targets, budget, true, &mut r)?;
        }
        Some(k) => {
            let grid = ValueGrid::top_levels(k as usize);
            let sources = grid_objects(&ws1, &grid, budget)?;
            let targets = grid_objects(&ws2, &grid, budget)?;
            for (g, a) in &sources {
                for (h, b) in &targets {
                    let mut sub = Report::default();
                    let t = embed_pairs(a, b, budget, false, &mut sub)?;
                    r.line(format!(
                        "{g} -> {h} over {}: {} pairs, faithful: {}, full: {}, hom-sets 𝔉𝔊=𝔉ℭ={}",
                        format_chain(grid.levels()),
                        t.pairs,
                        ok(t.faithful),
                        ok(t.full),
                        t.homs
                    ));
                    r.text.push_str(&sub.text);
                    r.results.extend(sub.results);
                    r.fail(sub.code);
                    total.pairs += t.pairs;
                    total.homs += t.homs;
                    total.faithful &= t.faithful;
                    total.full &= t.full;
                }
            }
        }
    }
    r.line(format!(
        "embedding: faithful: {}, full: {}, pairs {}, hom-sets 𝔉𝔊=𝔉ℭ={}",
        ok(total.faithful),
        ok(total.full),
        total.pairs,
        total.homs
    ));
    Ok(r)
}

fn enumerate(file: &Path, k: u8, budget: Budget) -> Result<Report, Abort> {
    let ws = load(file)?;
    let grid = ValueGrid::top_levels(k as usize);
    let mut r = Report::default();
    for g in &ws.groups {
        let filter = enumerate_fuzzy_subgroups_filter(&g.group, &grid, budget)?;
        let chain = enumerate_fuzzy_subgroups_chain(&g.group, &grid, budget)?;
        let as_set = |list: &[FuzzySubgroup]| -> BTreeSet<Vec<MembershipValue>> {
            list.iter().map(|f| f.values().to_vec()).collect()
        };
        let agree = as_set(&filter) == as_set(&chain) && filter.len() == chain.len();
        r.line(format!(
            "group {} over {}: filter {}, chain {}, agree: {}",
            g.name,
            format_chain(grid.levels()),
            filter.len(),
            chain.len(),
            ok(agree)
        ));
        if !agree {
            r.fail(EXIT_THEOREM);
        }
        for f in &filter {
            r.line(format!("  {}", f.format_values()));
        }
        r.results.push(json!({
            "group": g.name,
            "grid": grid.levels().iter().map(ToString::to_string).collect::<Vec<_>>(),
            "filter_count": filter.len(),
            "chain_count": chain.len(),
            "agree": agree,
            "fuzzy_subgroups": filter.iter().map(|f| f.format_values()).collect::<Vec<_>>(),
        }));
    }
    Ok(r)
}
