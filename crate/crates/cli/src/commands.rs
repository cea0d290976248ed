use std::fmt::Write as _;
use std::fs;

use clap::ValueEnum;
use marked_groups::error::{LogicError, MarkedError, OracleError};
use marked_groups::families::build_family;
use marked_groups::logic::{
    check_up_membership, find_phi_witness, make_named_formula, parse_formula, verify_phi_witness, Evaluator, FiniteGroupTable, Formula,
};
use marked_groups::marked::{
    ball, check_lacunary_certificate, growth, in_basic_open, injectivity_radius, kernel_elements, nielsen_apply, parse_moves,
    pattern_sentence, similarity_radius, EpimorphismCheck, LacunaryCertificate,
};
use marked_groups::oracle::{DehnAlgorithm, DehnTrace};
use marked_groups::presentation::{check_small_cancellation, is_proper_power_free, parse_presentation, Presentation};
use marked_groups::rational::{self, Rational};
use marked_groups::word::{Alphabet, Word};
use marked_groups::MarkedGroup;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::{Command, Failure, Report};

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Emit {
    Summary,
    Presentation,
}

type Outcome = Result<Report, Failure>;

fn compute(e: impl std::fmt::Display) -> Failure {
    Failure::Compute(e.to_string())
}

fn oracle_failure(e: OracleError) -> Failure {
    match e {
        OracleError::MalformedSpec { .. } => Failure::Usage(e.to_string()),
        other => compute(other),
    }
}

fn marked_failure(e: MarkedError) -> Failure {
    match e {
        MarkedError::Oracle(o) => oracle_failure(o),
        MarkedError::InvalidMove(_) => Failure::Usage(e.to_string()),
        other => compute(other),
    }
}

fn read(path: &str) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| compute(format!("cannot read {path}: {e}")))
}

fn load_presentation(path: &str) -> Result<(Presentation, Vec<String>), Failure> {
    let parsed = parse_presentation(&read(path)?).map_err(|e| compute(format!("{path}: {e}")))?;
    Ok((parsed.presentation, parsed.warnings))
}

fn load_group(spec: &str, warnings: &mut Vec<String>) -> Result<MarkedGroup, Failure> {
    let family = build_family(spec).map_err(oracle_failure)?;
    warnings.extend(family.warnings.iter().cloned());
    family.into_marked().map_err(oracle_failure)
}

fn parse_word(alphabet: &Alphabet, text: &str) -> Result<Word, Failure> {
    alphabet.parse_word(text).map_err(|e| Failure::Usage(format!("word `{text}`: {e}")))
}

/// Comma-separated word lists, possibly given several times.
fn parse_word_list(alphabet: &Alphabet, chunks: &[String]) -> Result<Vec<Word>, Failure> {
    chunks.iter().flat_map(|c| c.split(',')).map(str::trim).filter(|t| !t.is_empty()).map(|t| parse_word(alphabet, t)).collect()
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report types serialize")
}

pub fn run(cmd: &Command) -> Outcome {
    match cmd {
        Command::CheckSc { file, lambda } => check_sc(file, lambda),
        Command::Wp { file, word } => wp(file, word),
        Command::Ball { group, radius, limits } => ball_cmd(group, *radius, limits.cap, true),
        Command::Signature { group, radius, limits } => ball_cmd(group, *radius, limits.cap, false),
        Command::Similar { a, b, max_radius, limits } => similar(a, b, *max_radius, limits.cap, false),
        Command::Dist { a, b, max_radius, limits } => similar(a, b, *max_radius, limits.cap, true),
        Command::Nielsen { group, moves, radius, limits } => nielsen(group, moves, *radius, limits.cap),
        Command::Kernel { group, max_len } => kernel(group, *max_len),
        Command::Chabauty { group, inside, outside } => chabauty(group, inside, outside),
        Command::InjRadius { src, dst, max_radius, limits } => inj_radius(src, dst, *max_radius, limits.cap),
        Command::LhCheck { sequence, max_radius, limits } => lh_check(sequence, *max_radius, limits.cap),
        Command::Family { spec, emit } => family(spec, *emit),
        Command::Modelcheck { table, formula, budget } => modelcheck(table, formula, *budget),
        Command::UpCheck { group, p, limits } => up_check(group, *p, limits.cap),
        Command::PatternSentence { group, radius, limits } => pattern(group, *radius, limits.cap),
        Command::Growth { group, max_radius, limits } => growth_cmd(group, *max_radius, limits.cap),
    }
}

fn check_sc(file: &str, lambda: &str) -> Outcome {
    let lam = rational::parse(lambda).ok_or_else(|| Failure::Usage(format!("--lambda `{lambda}` is not a rational p/q")))?;
    let (p, warnings) = load_presentation(file)?;
    let rep = check_small_cancellation(&p, lam);
    let a = p.alphabet();
    let witness = rep.witness_pair.as_ref().map(|(r, s)| [a.format_word(r), a.format_word(s)]);
    let proper_power = is_proper_power_free(&p).err();
    let mut text = String::new();
    writeln!(text, "passed: {}", rep.passed).unwrap();
    writeln!(text, "lambda: {}", rational::format(&rep.lambda)).unwrap();
    writeln!(text, "max_ratio: {}", rep.max_ratio_text()).unwrap();
    writeln!(text, "max_piece_len: {}", rep.max_piece_len).unwrap();
    match &witness {
        Some([r, s]) => writeln!(text, "witness: {r} | {s} (piece length {})", rep.witness_piece_len).unwrap(),
        None => writeln!(text, "witness: none").unwrap(),
    }
    writeln!(text, "symmetrized_size: {}", rep.symmetrized_size).unwrap();
    match &proper_power {
        None => writeln!(text, "proper_power_free: true").unwrap(),
        Some(pp) => {
            writeln!(text, "proper_power_free: false (relator {} is ({})^{})", pp.relator_index + 1, a.format_word(&pp.root), pp.exponent)
                .unwrap()
        }
    }
    let result = json!({
        "passed": rep.passed,
        "lambda": rational::format(&rep.lambda),
        "max_ratio": rep.max_ratio_text(),
        "max_piece_len": rep.max_piece_len,
        "witness_pair": witness,
        "witness_piece_len": rep.witness_piece_len,
        "symmetrized_size": rep.symmetrized_size,
        "proper_power_free": proper_power.is_none(),
    });
    Ok(Report { inputs: json!({ "file": file, "lambda": lambda }), result, warnings, text })
}

fn trace_value(a: &Alphabet, t: &DehnTrace) -> Value {
    let steps: Vec<Value> = t
        .steps
        .iter()
        .map(|s| {
            json!({
                "position": s.position,
                "relator": a.format_word(&s.relator),
                "prefix_len": s.prefix_len,
                "replacement": a.format_word(&s.replacement),
            })
        })
        .collect();
    json!({
        "start_word": a.format_word(&t.start_word),
        "steps": steps,
        "final_word": a.format_word(&t.final_word),
    })
}

fn wp(file: &str, word: &str) -> Outcome {
    let (p, warnings) = load_presentation(file)?;
    let w = parse_word(p.alphabet(), word)?;
    let algo = DehnAlgorithm::new(&p).map_err(|r| compute(OracleError::NotSmallCancellation(r)))?;
    let trace = algo.reduce(&w);
    let a = p.alphabet();
    let verdict = if trace.is_trivial() { "trivial" } else { "nontrivial" };
    let mut text = format!("verdict: {verdict}\nstart: {}\n", a.format_word(&trace.start_word));
    for (k, s) in trace.steps.iter().enumerate() {
        writeln!(
            text,
            "step {}: at {} replace {} letters of {} by {}",
            k + 1,
            s.position,
            s.prefix_len,
            a.format_word(&s.relator),
            a.format_word(&s.replacement)
        )
        .unwrap();
    }
    writeln!(text, "final: {}", a.format_word(&trace.final_word)).unwrap();
    let result = json!({ "verdict": verdict, "trace": trace_value(a, &trace) });
    Ok(Report { inputs: json!({ "file": file, "word": word }), result, warnings, text })
}

fn ball_cmd(spec: &str, radius: usize, cap: usize, with_reps: bool) -> Outcome {
    let mut warnings = Vec::new();
    let m = load_group(spec, &mut warnings)?;
    let g = ball(&m, radius, cap).map_err(marked_failure)?;
    let export = g.export(&m);
    let letters: Vec<String> = marked_groups::word::Letter::all(m.arity()).map(|l| m.alphabet().format_word(&Word::letter(l))).collect();
    let mut text = format!("radius: {radius}\nvertices: {}\nletters: {}\n", export.vertices, letters.join(" "));
    for (v, row) in export.transitions.iter().enumerate() {
        let targets: Vec<String> = row.iter().map(i64::to_string).collect();
        if with_reps {
            writeln!(text, "{v} [{}]: {}", export.reps[v], targets.join(" ")).unwrap();
        } else {
            writeln!(text, "{v}: {}", targets.join(" ")).unwrap();
        }
    }
    let result = if with_reps { to_value(&export) } else { to_value(&g.signature()) };
    Ok(Report { inputs: json!({ "group": spec, "radius": radius, "cap": cap }), result, warnings, text })
}

fn similar(a: &str, b: &str, max_r: usize, cap: usize, as_distance: bool) -> Outcome {
    let mut warnings = Vec::new();
    let ga = load_group(a, &mut warnings)?;
    let gb = load_group(b, &mut warnings)?;
    let s = similarity_radius(&ga, &gb, max_r, cap).map_err(marked_failure)?;
    let d = s.distance();
    let mut text = if as_distance { format!("distance: {d}\n") } else { format!("radius: {}\n", s.radius) };
    if s.capped {
        writeln!(text, "capped: balls agree up to max radius {max_r}; the true radius may be larger").unwrap();
    }
    if s.arity_mismatch {
        writeln!(text, "arity mismatch: {} vs {}", ga.arity(), gb.arity()).unwrap();
    }
    let mut result = to_value(&s);
    if as_distance {
        result["distance"] = json!(d.to_string());
        result["value"] = json!(d.value());
    }
    let inputs = json!({ "a": a, "b": b, "max_radius": max_r, "cap": cap });
    Ok(Report { inputs, result, warnings, text })
}

fn nielsen(spec: &str, moves: &str, radius: Option<usize>, cap: usize) -> Outcome {
    let mut warnings = Vec::new();
    let m = load_group(spec, &mut warnings)?;
    let moves = parse_moves(moves).map_err(marked_failure)?;
    let mut cur = m.clone();
    for mv in &moves {
        cur = nielsen_apply(&cur, *mv).map_err(marked_failure)?;
    }
    let names = cur.alphabet().names();
    let words = cur.marker_texts();
    let mut text = String::new();
    for (n, w) in names.iter().zip(&words) {
        writeln!(text, "{n} = {w}").unwrap();
    }
    let markers: Vec<Value> = names.iter().zip(&words).map(|(n, w)| json!({ "name": n, "word": w })).collect();
    let mut result = json!({ "markers": markers });
    if let Some(r) = radius {
        let sizes = growth(&cur, r, cap).map_err(marked_failure)?;
        writeln!(text, "growth: {}", sizes.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")).unwrap();
        result["growth"] = json!(sizes);
    }
    let texts: Vec<String> = moves.iter().map(ToString::to_string).collect();
    Ok(Report { inputs: json!({ "group": spec, "moves": texts }), result, warnings, text })
}

fn kernel(spec: &str, max_len: usize) -> Outcome {
    let mut warnings = Vec::new();
    let m = load_group(spec, &mut warnings)?;
    let words: Vec<String> = kernel_elements(&m, max_len).iter().map(|w| m.alphabet().format_word(w)).collect();
    let mut text = format!("{} kernel words of length <= {max_len}\n", words.len());
    for w in &words {
        writeln!(text, "{w}").unwrap();
    }
    let result = json!({ "max_len": max_len, "words": words });
    Ok(Report { inputs: json!({ "group": spec, "max_len": max_len }), result, warnings, text })
}

fn chabauty(spec: &str, inside: &[String], outside: &[String]) -> Outcome {
    let mut warnings = Vec::new();
    let m = load_group(spec, &mut warnings)?;
    let ys = parse_word_list(m.alphabet(), inside)?;
    let zs = parse_word_list(m.alphabet(), outside)?;
    let member = in_basic_open(&m, &ys, &zs).map_err(oracle_failure)?;
    let fmt = |ws: &[Word]| ws.iter().map(|w| m.alphabet().format_word(w)).collect::<Vec<_>>();
    let text = format!("member: {member}\n");
    let result = json!({ "member": member, "inside": fmt(&ys), "outside": fmt(&zs) });
    Ok(Report { inputs: json!({ "group": spec, "in": inside, "out": outside }), result, warnings, text })
}

fn epimorphism_text(e: &EpimorphismCheck) -> String {
    match e {
        EpimorphismCheck::Trusted => "trusted (source has no presentation)".into(),
        EpimorphismCheck::Verified { relators } => format!("verified ({relators} relators die in the target)"),
        EpimorphismCheck::Refuted { relator_index } => format!("refuted (relator {} survives in the target)", relator_index + 1),
    }
}

fn inj_radius(src: &str, dst: &str, max_r: usize, cap: usize) -> Outcome {
    let mut warnings = Vec::new();
    let a = load_group(src, &mut warnings)?;
    let b = load_group(dst, &mut warnings)?;
    let rep = injectivity_radius(&a, &b, max_r, cap).map_err(marked_failure)?;
    let mut text = format!("radius: {}\n", rep.radius);
    if rep.capped {
        writeln!(text, "capped: injective up to max radius {max_r}").unwrap();
    }
    writeln!(text, "epimorphism: {}", epimorphism_text(&rep.epimorphism)).unwrap();
    let inputs = json!({ "src": src, "dst": dst, "max_radius": max_r, "cap": cap });
    Ok(Report { inputs, result: to_value(&rep), warnings, text })
}

#[derive(Deserialize)]
#[serde(untagged)]
enum DeltaText {
    Int(u64),
    Text(String),
}

#[derive(Deserialize)]
struct SequenceFile {
    stages: Vec<String>,
    radii: Vec<usize>,
    deltas: Vec<DeltaText>,
}

fn lh_check(path: &str, max_r: usize, cap: usize) -> Outcome {
    let seq: SequenceFile = serde_json::from_str(&read(path)?).map_err(|e| compute(format!("{path}: {e}")))?;
    let deltas = seq
        .deltas
        .iter()
        .map(|d| match d {
            DeltaText::Int(n) => Ok(Rational::from_integer(*n)),
            DeltaText::Text(t) => rational::parse(t).ok_or_else(|| compute(format!("{path}: delta `{t}` is not a rational"))),
        })
        .collect::<Result<Vec<_>, _>>()?;
    let mut warnings = Vec::new();
    let stages = seq.stages.iter().map(|s| load_group(s, &mut warnings)).collect::<Result<Vec<_>, _>>()?;
    let cert = LacunaryCertificate::new(stages, seq.radii.clone(), deltas).map_err(marked_failure)?;
    let rep = check_lacunary_certificate(&cert, max_r, cap).map_err(marked_failure)?;
    let mut text = String::new();
    for (i, l) in rep.links.iter().enumerate() {
        writeln!(
            text,
            "link {} {} -> {}: r={} checked={} injective_radius={} {} ratio={} {}",
            i + 1,
            l.from,
            l.to,
            l.claimed_radius,
            l.checked_radius,
            l.injectivity.radius,
            if l.passed { "PASS" } else { "FAIL" },
            rational::format(&l.ratio),
            epimorphism_text(&l.injectivity.epimorphism),
        )
        .unwrap();
    }
    writeln!(text, "injectivity: {}", if rep.injectivity_holds { "holds" } else { "fails" }).unwrap();
    if let Some(k) = rep.first_failure {
        writeln!(text, "first failure: stage {k}").unwrap();
    }
    writeln!(text, "ratios increasing: {}", rep.ratios_increasing).unwrap();
    writeln!(text, "deltas: {}", rep.deltas_status).unwrap();
    let inputs = json!({ "sequence": path, "max_radius": max_r, "cap": cap });
    Ok(Report { inputs, result: to_value(&rep), warnings, text })
}

fn family(spec: &str, emit: Emit) -> Outcome {
    let fam = build_family(spec).map_err(oracle_failure)?;
    let warnings = fam.warnings.clone();
    let inputs = json!({ "spec": spec, "emit": format!("{emit:?}").to_lowercase() });
    match emit {
        Emit::Presentation => {
            let p = fam.presentation.as_ref().ok_or_else(|| compute(format!("{spec} has no finite presentation")))?;
            let text = p.to_string();
            Ok(Report { inputs, result: json!({ "presentation": text }), warnings, text })
        }
        Emit::Summary => {
            let mut text = format!("spec: {spec}\n");
            let mut result = json!({ "spec": spec });
            match &fam.marked {
                Some(m) => {
                    writeln!(text, "arity: {}\ngenerators: {}", m.arity(), m.alphabet().names().join(" ")).unwrap();
                    result["arity"] = json!(m.arity());
                    result["generators"] = json!(m.alphabet().names());
                    result["oracle"] = json!(true);
                }
                None => {
                    writeln!(text, "oracle: none").unwrap();
                    result["oracle"] = json!(false);
                }
            }
            if let Some(p) = &fam.presentation {
                let rep = check_small_cancellation(p, Rational::new(1, 6));
                let lengths: Vec<usize> = p.relators().iter().map(Word::len).collect();
                writeln!(text, "relators: {}", lengths.len()).unwrap();
                writeln!(text, "relator lengths: {}", lengths.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")).unwrap();
                writeln!(text, "C'(1/6): {} (max ratio {})", if rep.passed { "passes" } else { "fails" }, rep.max_ratio_text()).unwrap();
                result["relator_lengths"] = json!(lengths);
                result["small_cancellation"] = json!({ "passed": rep.passed, "max_ratio": rep.max_ratio_text() });
            }
            if let Some(n) = &fam.note {
                writeln!(text, "note: {n}").unwrap();
                result["note"] = json!(n);
            }
            Ok(Report { inputs, result, warnings, text })
        }
    }
}

fn logic_failure(e: LogicError) -> Failure {
    match e {
        LogicError::UnknownFormula(_) | LogicError::BadParameter(_) => Failure::Usage(e.to_string()),
        other => compute(other),
    }
}

fn load_formula(arg: &str) -> Result<Formula, Failure> {
    let named = arg == "zeta" || arg.starts_with("psi:") || arg.starts_with("phi:");
    if named && !std::path::Path::new(arg).exists() {
        return make_named_formula(arg).map_err(logic_failure);
    }
    parse_formula(&read(arg)?).map_err(|e| compute(format!("{arg}: {e}")))
}

fn modelcheck(table_path: &str, formula: &str, budget: u64) -> Outcome {
    let table = FiniteGroupTable::from_json(&read(table_path)?).map_err(|e| compute(format!("{table_path}: {e}")))?;
    let f = load_formula(formula)?;
    if let Some(v) = f.free_vars().into_iter().next() {
        return Err(compute(format!("formula is not a sentence: `{v}` is free")));
    }
    let mut ev = Evaluator::new(&table, budget);
    let holds = ev.eval(&f, &mut Vec::new()).map_err(logic_failure)?;
    let mut text = format!("holds: {holds}\norder: {}\nevaluations: {}\n", table.order(), ev.used());
    let mut result = json!({ "holds": holds, "order": table.order(), "evaluations": ev.used() });
    if let Some(p) = formula.strip_prefix("phi:").and_then(|p| p.parse::<usize>().ok()).filter(|_| holds) {
        let w = find_phi_witness(&table, p, budget)
            .map_err(logic_failure)?
            .ok_or_else(|| compute("model checker and witness search disagree"))?;
        let check = verify_phi_witness(&table, p, &w);
        let names: Vec<&str> = w.xs.iter().map(|&x| table.name(x)).collect();
        writeln!(text, "witness: {} h={}", names.join(" "), table.name(w.h)).unwrap();
        writeln!(text, "witness verified: {}", check.all()).unwrap();
        result["witness"] = json!({ "xs": names, "h": table.name(w.h), "check": to_value(&check) });
    }
    Ok(Report { inputs: json!({ "table": table_path, "formula": formula, "budget": budget }), result, warnings: Vec::new(), text })
}

fn up_check(spec: &str, p: usize, cap: usize) -> Outcome {
    let mut warnings = Vec::new();
    let m = load_group(spec, &mut warnings)?;
    let rep = check_up_membership(&m, p, cap).map_err(marked_failure)?;
    let mut text = format!("member: {}\n", rep.member);
    writeln!(text, "similarity radius: {} (required {})", rep.similarity.radius, rep.required_radius).unwrap();
    writeln!(text, "orders p: {}", rep.orders_p).unwrap();
    writeln!(text, "commute: {}", rep.commute).unwrap();
    writeln!(text, "conjugation permutes: {}", rep.conjugation_permutes).unwrap();
    writeln!(text, "a_1 c != c a_1: {}", rep.noncentral).unwrap();
    Ok(Report { inputs: json!({ "group": spec, "p": p, "cap": cap }), result: to_value(&rep), warnings, text })
}

fn pattern(spec: &str, radius: usize, cap: usize) -> Outcome {
    let mut warnings = Vec::new();
    let m = load_group(spec, &mut warnings)?;
    let f = pattern_sentence(&m, radius, cap).map_err(marked_failure)?;
    let s = f.to_string();
    let result = json!({ "formula": s, "atoms": f.atom_count() });
    Ok(Report { inputs: json!({ "group": spec, "radius": radius, "cap": cap }), result, warnings, text: format!("{s}\n") })
}

fn growth_cmd(spec: &str, max_r: usize, cap: usize) -> Outcome {
    let mut warnings = Vec::new();
    let m = load_group(spec, &mut warnings)?;
    let sizes = growth(&m, max_r, cap).map_err(marked_failure)?;
    let text = format!("{}\n", sizes.iter().map(usize::to_string).collect::<Vec<_>>().join(" "));
    Ok(Report { inputs: json!({ "group": spec, "max_radius": max_r, "cap": cap }), result: json!({ "sizes": sizes }), warnings, text })
}
