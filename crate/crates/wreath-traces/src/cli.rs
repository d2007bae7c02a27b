//! Command implementations behind the `wreath-traces` binary: each
//! returns a [`CommandOutput`] renderable as text, JSON, or CSV, keeping
//! the binary itself a thin argument parser.

use num::BigUint;
use serde_json::{json, Map, Value};

use crate::census::{
    census_counts_for_table, char_poly, char_poly_eval_signed_one, for_each_marked_partition,
    is_s_admissible, is_t_admissible, reflection_census, CharPolyFactors, MarkedPartition, Sign,
};
use crate::error::{Error, Result};
use crate::exact::RationalAngle;
use crate::gamma::{table_for, GammaSpec};
use crate::oracle::{enumerate_wreath, conjugacy_classes_brute, OracleContext};
use crate::series::{
    biguint_to_json, class_series, supertrace_series, trace_series, TruncatedSeries,
};

/// Largest truncation order accepted by the series command.
pub const MAX_SERIES_NMAX: usize = 10_000;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// A fully rendered command result; the binary picks one view.
pub struct CommandOutput {
    pub json: Value,
    pub text: String,
    pub csv: String,
}

impl CommandOutput {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::Json => serde_json::to_string_pretty(&self.json).expect("valid json"),
            Format::Csv => self.csv.clone(),
        }
    }
}

pub fn parse_gamma(input: &str) -> Result<GammaSpec> {
    input.parse()
}

fn angle_string(angle: RationalAngle) -> String {
    format!("{angle}")
}

fn bool_str(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// `groups --gamma <spec>`: the class table of Γ plus the derived
/// predicates the counting layer consumes.
pub fn cmd_groups(gamma: &str) -> Result<CommandOutput> {
    let spec = parse_gamma(gamma)?;
    let table = table_for(spec);
    let reflections = reflection_census(&table, 2);

    let classes_json: Vec<Value> = table
        .classes
        .iter()
        .map(|c| {
            json!({
                "id": c.id,
                "label": table.label(c.id),
                "size": c.size,
                "element_order": c.element_order,
                "angle": angle_string(c.angle),
                "is_identity": c.is_identity,
                "is_minus_one": c.is_minus_one,
            })
        })
        .collect();
    let json = json!({
        "command": "groups",
        "gamma": spec.to_string(),
        "order": table.order,
        "class_count": table.class_count(),
        "contains_minus_one": table.contains_minus_one(),
        "klein_exists_positive_n": table.klein_exists(1),
        "reflection_classes": reflections.reflection_classes,
        "reflection_parameters": reflections.parameter_count,
        "classes": classes_json,
    });

    let mut text = format!(
        "group {spec}: order {}, {} conjugacy classes\n",
        table.order,
        table.class_count()
    );
    text += &format!(
        "contains -1: {}   Klein operator (N>=1): {}\n",
        bool_str(table.contains_minus_one()),
        bool_str(table.klein_exists(1))
    );
    text += &format!(
        "reflection classes in wreath products (N>=2): {}   coupling parameters: {}\n",
        reflections.reflection_classes, reflections.parameter_count
    );
    text += "classes (id, size, element order, angle):\n";
    for c in &table.classes {
        text += &format!(
            "  {:>4}  size {:>4}  order {:>4}  angle {}{}{}\n",
            table.label(c.id),
            c.size,
            c.element_order,
            angle_string(c.angle),
            if c.is_identity { "  [identity]" } else { "" },
            if c.is_minus_one { "  [-1]" } else { "" },
        );
    }

    let mut csv = String::from(
        "gamma,order,class_count,contains_minus_one,class_id,label,size,element_order,angle,is_identity,is_minus_one\n",
    );
    for c in &table.classes {
        csv += &format!(
            "{spec},{},{},{},{},{},{},{},{},{},{}\n",
            table.order,
            table.class_count(),
            table.contains_minus_one(),
            c.id,
            table.label(c.id),
            c.size,
            c.element_order,
            angle_string(c.angle),
            c.is_identity,
            c.is_minus_one,
        );
    }

    Ok(CommandOutput { json, text, csv })
}

fn factors_json(factors: &CharPolyFactors) -> Value {
    Value::Array(
        factors
            .factors
            .iter()
            .map(|f| {
                json!({
                    "angle": angle_string(f.angle),
                    "cycle_len": f.cycle_len,
                    "multiplicity": f.multiplicity,
                })
            })
            .collect(),
    )
}

fn factors_text(factors: &CharPolyFactors) -> String {
    if factors.factors.is_empty() {
        return "1".to_string();
    }
    factors
        .factors
        .iter()
        .map(|f| {
            let mid = -2.0 * f.angle.cos_f64();
            format!(
                "(λ^{} {} {:.6}·λ^{} + 1)^{}",
                2 * f.cycle_len,
                if mid < 0.0 { "-" } else { "+" },
                mid.abs(),
                f.cycle_len,
                f.multiplicity
            )
        })
        .collect::<Vec<_>>()
        .join(" · ")
}

/// `census --gamma <spec> --n <N> [--list]`: C/T/S by direct counting;
/// beyond the census bounds the summary falls back to generating-function
/// coefficients (reported as method "series").
pub fn cmd_census(gamma: &str, n: u64, list: bool) -> Result<CommandOutput> {
    let spec = parse_gamma(gamma)?;
    let table = table_for(spec);

    let (c, t, s, method) = match census_counts_for_table(&table, n) {
        Ok(result) => (result.c, result.t, result.s, "census"),
        Err(Error::ResourceBound { .. }) if !list && n <= MAX_SERIES_NMAX as u64 => {
            let nmax = n as usize;
            let c = class_series(spec, nmax).coeff(nmax).clone();
            let t = trace_series(spec, nmax).coeff(nmax).clone();
            let s = supertrace_series(spec, nmax).coeff(nmax).clone();
            (c, t, s, "series")
        }
        Err(e) => return Err(e),
    };

    let mut json_map = Map::new();
    json_map.insert("command".into(), json!("census"));
    json_map.insert("gamma".into(), json!(spec.to_string()));
    json_map.insert("n".into(), json!(n));
    json_map.insert("method".into(), json!(method));
    json_map.insert("c".into(), biguint_to_json(&c));
    json_map.insert("t".into(), biguint_to_json(&t));
    json_map.insert("s".into(), biguint_to_json(&s));

    let mut text = format!(
        "{spec} wr S_{n}: C = {c}, T = {t}, S = {s}   (method: {method})\n"
    );
    let mut csv = String::from("gamma,n,method,c,t,s\n");
    csv += &format!("{spec},{n},{method},{c},{t},{s}\n");

    if list {
        let mut rows = Vec::new();
        for_each_marked_partition(&table, n, |mp| {
            let factors = char_poly(mp, &table);
            rows.push((
                mp.render(),
                mp.weight(),
                is_t_admissible(mp, &table),
                is_s_admissible(mp, &table),
                factors,
            ));
        });
        text += "partitions (t-admissible, s-admissible, characteristic polynomial):\n";
        csv = String::from("gamma,n,partition,weight,t_admissible,s_admissible\n");
        let mut partitions_json = Vec::new();
        for (rendered, weight, t_adm, s_adm, factors) in &rows {
            partitions_json.push(json!({
                "partition": rendered,
                "weight": weight,
                "t_admissible": t_adm,
                "s_admissible": s_adm,
                "char_poly": factors_json(factors),
            }));
            text += &format!(
                "  {:<24} t={:<3} s={:<3}  {}\n",
                rendered,
                bool_str(*t_adm),
                bool_str(*s_adm),
                factors_text(factors)
            );
            csv += &format!("{spec},{n},{rendered},{weight},{t_adm},{s_adm}\n");
        }
        json_map.insert("partitions".into(), Value::Array(partitions_json));
    }

    Ok(CommandOutput {
        json: Value::Object(json_map),
        text,
        csv,
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SeriesKind {
    Trace,
    Supertrace,
    Classes,
}

impl SeriesKind {
    pub fn parse(input: &str) -> Result<Self> {
        match input {
            "t" => Ok(SeriesKind::Trace),
            "s" => Ok(SeriesKind::Supertrace),
            "c" => Ok(SeriesKind::Classes),
            other => Err(Error::BadPartition {
                input: other.to_string(),
                reason: "series kind must be one of t, s, c".to_string(),
            }),
        }
    }

    fn letter(self) -> &'static str {
        match self {
            SeriesKind::Trace => "t",
            SeriesKind::Supertrace => "s",
            SeriesKind::Classes => "c",
        }
    }
}

/// `series --gamma <spec> --which t|s|c --nmax <n>`: truncated
/// coefficient vector of t(Γ,x), s(Γ,x), or c(Γ,x).
pub fn cmd_series(gamma: &str, which: SeriesKind, nmax: usize) -> Result<CommandOutput> {
    let spec = parse_gamma(gamma)?;
    if nmax > MAX_SERIES_NMAX {
        return Err(Error::ResourceBound {
            what: "series truncation order",
            required: nmax as u128,
            allowed: MAX_SERIES_NMAX as u128,
        });
    }
    let series: TruncatedSeries = match which {
        SeriesKind::Trace => trace_series(spec, nmax),
        SeriesKind::Supertrace => supertrace_series(spec, nmax),
        SeriesKind::Classes => class_series(spec, nmax),
    };

    let json = json!({
        "command": "series",
        "gamma": spec.to_string(),
        "which": which.letter(),
        "nmax": nmax,
        "coefficients": series.to_json(),
    });

    let coeff_strings: Vec<String> = series.coeffs().iter().map(|c| c.to_string()).collect();
    let text = format!(
        "{}({spec}, x) coefficients 0..{nmax}:\n[{}]\n",
        which.letter(),
        coeff_strings.join(", ")
    );

    let mut csv = String::from("gamma,which,n,coefficient\n");
    for (i, c) in coeff_strings.iter().enumerate() {
        csv += &format!("{spec},{},{i},{c}\n", which.letter());
    }

    Ok(CommandOutput { json, text, csv })
}

/// `charpoly --gamma <spec> --mp "<partition>"`: factored and expanded
/// characteristic polynomial with admissibility verdicts.
pub fn cmd_charpoly(gamma: &str, partition: &str) -> Result<CommandOutput> {
    let spec = parse_gamma(gamma)?;
    let table = table_for(spec);
    let mp = MarkedPartition::parse(partition, &table)?;
    let factors = char_poly(&mp, &table);
    let expanded = factors.expand_numeric();
    let (zero_plus, value_plus) = char_poly_eval_signed_one(&factors, Sign::Plus);
    let (zero_minus, value_minus) = char_poly_eval_signed_one(&factors, Sign::Minus);
    let t_adm = is_t_admissible(&mp, &table);
    let s_adm = is_s_admissible(&mp, &table);

    let json = json!({
        "command": "charpoly",
        "gamma": spec.to_string(),
        "partition": mp.render(),
        "n": mp.weight(),
        "degree": factors.degree(),
        "factors": factors_json(&factors),
        "expanded_coefficients": expanded,
        "plus_one": { "is_zero": zero_plus, "value": value_plus },
        "minus_one": { "is_zero": zero_minus, "value": value_minus },
        "t_admissible": t_adm,
        "s_admissible": s_adm,
    });

    let coeff_text: Vec<String> = expanded.iter().map(|c| format!("{c:.6}")).collect();
    let text = format!(
        "partition {} over {spec} (N = {})\n\
         factored: {}\n\
         expanded coefficients (constant first): [{}]\n\
         P(+1) = {:.6} (zero: {})   P(-1) = {:.6} (zero: {})\n\
         t-admissible: {}   s-admissible: {}\n",
        mp.render(),
        mp.weight(),
        factors_text(&factors),
        coeff_text.join(", "),
        value_plus,
        bool_str(zero_plus),
        value_minus,
        bool_str(zero_minus),
        bool_str(t_adm),
        bool_str(s_adm),
    );

    let mut csv = String::from(
        "gamma,partition,degree,factor_angle,factor_cycle_len,factor_multiplicity,t_admissible,s_admissible\n",
    );
    if factors.factors.is_empty() {
        csv += &format!("{spec},{},0,,,,{t_adm},{s_adm}\n", mp.render());
    }
    for f in &factors.factors {
        csv += &format!(
            "{spec},{},{},{},{},{},{t_adm},{s_adm}\n",
            mp.render(),
            factors.degree(),
            angle_string(f.angle),
            f.cycle_len,
            f.multiplicity,
        );
    }

    Ok(CommandOutput { json, text, csv })
}

struct Comparison {
    check: &'static str,
    n: u64,
    quantity: String,
    left: String,
    right: String,
}

impl Comparison {
    fn passed(&self) -> bool {
        self.left == self.right
    }
}

/// Outcome of `verify`: the rendered report plus the overall verdict the
/// binary turns into exit code 0 or 1.
pub struct VerifyOutcome {
    pub output: CommandOutput,
    pub passed: bool,
}

pub struct VerifyOptions {
    pub nmax: u64,
    pub oracle_max: u64,
    pub skip_oracle: bool,
    pub tolerance: f64,
    pub oracle_cap: u64,
    /// Test hook: perturb one compared value to exercise the failure path.
    pub inject_mismatch: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            nmax: 8,
            oracle_max: 2,
            skip_oracle: false,
            tolerance: crate::oracle::DEFAULT_EIGEN_TOLERANCE,
            oracle_cap: crate::oracle::oracle_cap_from_env(),
            inject_mismatch: false,
        }
    }
}

/// `verify --gamma <spec>`: census vs series for N ≤ nmax, the
/// element-level oracle for N ≤ oracle_max, and the trace/supertrace
/// inequalities, reported as a structured diff.
pub fn cmd_verify(gamma: &str, options: &VerifyOptions) -> Result<VerifyOutcome> {
    let spec = parse_gamma(gamma)?;
    let table = table_for(spec);
    let nmax = options.nmax;
    let mut comparisons: Vec<Comparison> = Vec::new();

    // census vs generating functions, coefficient by coefficient
    let t_series = trace_series(spec, nmax as usize);
    let s_series = supertrace_series(spec, nmax as usize);
    let c_series = class_series(spec, nmax as usize);
    for n in 0..=nmax {
        let census = census_counts_for_table(&table, n)?;
        let mut series_t = t_series.coeff(n as usize).clone();
        if options.inject_mismatch && n == nmax.min(1) {
            series_t += 1u32;
        }
        for (quantity, left, right) in [
            ("c", census.c.clone(), c_series.coeff(n as usize).clone()),
            ("t", census.t.clone(), series_t),
            ("s", census.s.clone(), s_series.coeff(n as usize).clone()),
        ] {
            comparisons.push(Comparison {
                check: "census_vs_series",
                n,
                quantity: quantity.to_string(),
                left: left.to_string(),
                right: right.to_string(),
            });
        }
    }

    // element-level oracle: counts and classification bijection
    if !options.skip_oracle {
        let ctx = OracleContext::new(spec)?;
        for n in 0..=options.oracle_max {
            let (c, t, s) = ctx.counts(n as usize, options.oracle_cap, options.tolerance)?;
            let census = census_counts_for_table(&table, n)?;
            for (quantity, left, right) in [
                ("c", BigUint::from(c), census.c),
                ("t", BigUint::from(t), census.t),
                ("s", BigUint::from(s), census.s),
            ] {
                comparisons.push(Comparison {
                    check: "oracle_vs_census",
                    n,
                    quantity: quantity.to_string(),
                    left: left.to_string(),
                    right: right.to_string(),
                });
            }

            let elements = enumerate_wreath(&ctx.group, n as usize, options.oracle_cap)?;
            let classes = conjugacy_classes_brute(&elements, &ctx.group);
            let mut images = std::collections::HashSet::new();
            let mut constant = true;
            for class in &classes {
                let image = ctx.classify_element(&elements[class[0]]);
                constant &= class
                    .iter()
                    .all(|&member| ctx.classify_element(&elements[member]) == image);
                images.insert(image);
            }
            let expected: std::collections::HashSet<_> =
                crate::census::enumerate_marked_partitions(&ctx.table, n)
                    .into_iter()
                    .collect();
            comparisons.push(Comparison {
                check: "classify_bijection",
                n,
                quantity: "constant_on_classes".to_string(),
                left: constant.to_string(),
                right: "true".to_string(),
            });
            comparisons.push(Comparison {
                check: "classify_bijection",
                n,
                quantity: "image_count".to_string(),
                left: images.len().to_string(),
                right: classes.len().to_string(),
            });
            comparisons.push(Comparison {
                check: "classify_bijection",
                n,
                quantity: "image_equals_enumeration".to_string(),
                left: (images == expected).to_string(),
                right: "true".to_string(),
            });
        }
    }

    // S > 0, S ≥ T, and S = T exactly when a Klein operator exists
    for n in 0..=nmax {
        let census = census_counts_for_table(&table, n)?;
        comparisons.push(Comparison {
            check: "inequalities",
            n,
            quantity: "s_positive".to_string(),
            left: (census.s > BigUint::from(0u32)).to_string(),
            right: "true".to_string(),
        });
        comparisons.push(Comparison {
            check: "inequalities",
            n,
            quantity: "s_ge_t".to_string(),
            left: (census.s >= census.t).to_string(),
            right: "true".to_string(),
        });
        comparisons.push(Comparison {
            check: "inequalities",
            n,
            quantity: "s_eq_t_iff_klein".to_string(),
            left: ((census.s == census.t) == table.klein_exists(n)).to_string(),
            right: "true".to_string(),
        });
    }

    let mismatches: Vec<&Comparison> = comparisons.iter().filter(|c| !c.passed()).collect();
    let passed = mismatches.is_empty();

    let check_names = ["census_vs_series", "oracle_vs_census", "classify_bijection", "inequalities"];
    let checks_json: Vec<Value> = check_names
        .iter()
        .filter_map(|name| {
            let cases: Vec<&Comparison> =
                comparisons.iter().filter(|c| c.check == *name).collect();
            if cases.is_empty() {
                return None;
            }
            Some(json!({
                "name": name,
                "cases": cases.len(),
                "passed": cases.iter().all(|c| c.passed()),
            }))
        })
        .collect();
    let mismatches_json: Vec<Value> = mismatches
        .iter()
        .map(|c| {
            json!({
                "check": c.check,
                "n": c.n,
                "quantity": c.quantity,
                "left": c.left,
                "right": c.right,
            })
        })
        .collect();
    let json = json!({
        "command": "verify",
        "gamma": spec.to_string(),
        "nmax": nmax,
        "oracle_max": options.oracle_max,
        "skip_oracle": options.skip_oracle,
        "passed": passed,
        "checks": checks_json,
        "mismatches": mismatches_json,
    });

    let mut text = format!(
        "verify {spec}: N <= {nmax} census/series, N <= {} oracle{}\n",
        options.oracle_max,
        if options.skip_oracle { " (skipped)" } else { "" }
    );
    for check in &checks_json {
        text += &format!(
            "  {:<20} {:>4} cases  {}\n",
            check["name"].as_str().unwrap_or("?"),
            check["cases"],
            if check["passed"].as_bool() == Some(true) {
                "pass"
            } else {
                "FAIL"
            }
        );
    }
    if !passed {
        text += "mismatches:\n";
        for c in &mismatches {
            text += &format!(
                "  {} N={} {}: {} != {}\n",
                c.check, c.n, c.quantity, c.left, c.right
            );
        }
    }
    text += if passed { "all checks passed\n" } else { "VERIFICATION FAILED\n" };

    let mut csv = String::from("check,n,quantity,left,right,passed\n");
    for c in &comparisons {
        csv += &format!(
            "{},{},{},{},{},{}\n",
            c.check,
            c.n,
            c.quantity,
            c.left,
            c.right,
            c.passed()
        );
    }

    Ok(VerifyOutcome {
        output: CommandOutput { json, text, csv },
        passed,
    })
}
