//! Command dispatch and deterministic report rendering.

use crate::problem::{ProblemFile, ProblemMode, Relations};
use std::fmt::Write as _;
use std::path::PathBuf;
use trigsb::envelopes::{self, TableKind};
use trigsb::gsb::{self, CompletionMode, GsbState};
use trigsb::oracle;
use trigsb::replication::{self, Membership, Mode, TriPoly};
use trigsb::symbols::Alphabet;
use trigsb::text;
use trigsb::TermMap;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NON_MEMBER: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_DATA: i32 = 65;
pub const EXIT_RUNTIME: i32 = 70;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Complete,
    Member { target: String },
    Nf { target: String },
    Basis,
    EnvPerp,
    EnvAssoc,
    OracleMember { target: String },
    OracleDim,
}

#[derive(Clone, Debug, Default)]
pub struct Flags {
    pub max_deg: Option<usize>,
    pub max_steps: Option<usize>,
    pub cache: Option<PathBuf>,
}

#[derive(Clone, Debug)]
pub struct RunOutput {
    pub report: String,
    pub exit: i32,
}

fn fail(exit: i32, msg: impl Into<String>) -> RunOutput {
    RunOutput {
        report: format!("error: {}\n", msg.into()),
        exit,
    }
}

/// The target expression lowered per mode: the replicated form when the
/// problem runs in di/tri mode, plus its encoding over the doubled alphabet.
enum Target {
    Plain(TermMap),
    Replicated(TriPoly, TermMap),
}

impl Target {
    fn encoded(&self) -> &TermMap {
        match self {
            Target::Plain(t) => t,
            Target::Replicated(_, e) => e,
        }
    }
}

fn parse_target(problem: &ProblemFile, alphabet: &Alphabet, text_input: &str) -> Result<Target, RunOutput> {
    match problem.mode {
        ProblemMode::Plain => {
            let terms = text::parse_plain_poly(alphabet, problem.variety, text_input)
                .map_err(|e| fail(EXIT_DATA, format!("target: {e}")))?;
            Ok(Target::Plain(terms))
        }
        ProblemMode::Di | ProblemMode::Tri => {
            let mode = problem.mode.replication().expect("di or tri");
            let p = text::parse_tri_poly(alphabet, mode, text_input)
                .map_err(|e| fail(EXIT_DATA, format!("target: {e}")))?;
            let enc = replication::encode(&p, problem.variety);
            Ok(Target::Replicated(p, enc))
        }
    }
}

fn completion_mode(mode: ProblemMode) -> CompletionMode {
    match mode {
        ProblemMode::Di => CompletionMode::Di,
        _ => CompletionMode::Full,
    }
}

fn max_relation_degree(problem: &ProblemFile) -> usize {
    match &problem.relations {
        Relations::Plain(v) => v
            .iter()
            .flat_map(|t| t.keys().map(|w| w.len()))
            .max()
            .unwrap_or(0),
        Relations::Replicated(v) => v.iter().map(TriPoly::max_degree).max().unwrap_or(0),
    }
}

/// Complete the problem's relations, or reuse a compatible cache that is
/// certified at least to `needed`.
fn obtain_state(
    problem: &ProblemFile,
    alphabet: &Alphabet,
    degree_bound: usize,
    needed: usize,
    flags: &Flags,
) -> Result<(GsbState, bool), RunOutput> {
    let steps = flags.max_steps.unwrap_or(gsb::DEFAULT_STEP_BOUND);
    if let Some(path) = &flags.cache {
        if let Ok(state) = GsbState::load(path) {
            if state.alphabet() == alphabet
                && state.flavor() == problem.variety
                && state.mode() == completion_mode(problem.mode)
                && state.is_complete()
                && state.complete_up_to() >= needed
            {
                return Ok((state, true));
            }
        }
    }
    let state = match &problem.relations {
        Relations::Plain(v) => gsb::complete(
            v,
            problem.variety,
            CompletionMode::Full,
            alphabet.clone(),
            degree_bound,
            steps,
        ),
        Relations::Replicated(v) => {
            let mode = problem.mode.replication().expect("di or tri");
            replication::completed_state(v, problem.variety, mode, alphabet, degree_bound, steps)
        }
    }
    .map_err(|e| fail(EXIT_DATA, e.to_string()))?;
    Ok((state, false))
}

fn require_alphabet(problem: &ProblemFile) -> Result<Alphabet, RunOutput> {
    problem
        .alphabet
        .clone()
        .ok_or_else(|| fail(EXIT_USAGE, "this command requires a `gens` line"))
}

fn state_header(out: &mut String, alphabet: &Alphabet, problem: &ProblemFile) {
    let _ = writeln!(out, "gens: {}", alphabet.base_names().join(" > "));
    let _ = writeln!(out, "flavor: {}", problem.variety.as_str());
    let _ = writeln!(out, "mode: {}", problem.mode.as_str());
}

fn render_state(out: &mut String, state: &GsbState, alphabet: &Alphabet) {
    let _ = writeln!(
        out,
        "certified degree: {} ({})",
        state.complete_up_to(),
        if state.is_complete() {
            "complete"
        } else {
            "incomplete"
        }
    );
    let _ = writeln!(out, "relations ({}):", state.relations().len());
    for r in state.relations() {
        let _ = writeln!(out, "{}", text::poly_string(alphabet, state.flavor(), r.terms()));
    }
    let _ = writeln!(out, "parked ({}):", state.parked().len());
    for p in state.parked() {
        let _ = writeln!(out, "{}", text::poly_string(alphabet, state.flavor(), p));
    }
}

const DEFAULT_COMPLETE_DEGREE: usize = 6;
const DEFAULT_ENVELOPE_DEGREE: usize = 4;

pub fn run(problem: &ProblemFile, cmd: &Command, flags: &Flags) -> RunOutput {
    match cmd {
        Command::Complete => cmd_complete(problem, flags),
        Command::Member { target } => cmd_member(problem, flags, target, true),
        Command::Nf { target } => cmd_member(problem, flags, target, false),
        Command::Basis => cmd_basis(problem, flags),
        Command::EnvPerp => cmd_env_perp(problem, flags),
        Command::EnvAssoc => cmd_env_assoc(problem, flags),
        Command::OracleMember { target } => cmd_oracle_member(problem, flags, target),
        Command::OracleDim => cmd_oracle_dim(problem, flags),
    }
}

fn cmd_complete(problem: &ProblemFile, flags: &Flags) -> RunOutput {
    let alphabet = match require_alphabet(problem) {
        Ok(a) => a,
        Err(e) => return e,
    };
    let bound = flags.max_deg.unwrap_or(DEFAULT_COMPLETE_DEGREE);
    // completion always recomputes; the cache flag selects where to save
    let no_cache = Flags {
        cache: None,
        ..flags.clone()
    };
    let (state, _) = match obtain_state(problem, &alphabet, bound, usize::MAX, &no_cache) {
        Ok(s) => s,
        Err(e) => return e,
    };
    let mut out = String::new();
    state_header(&mut out, &alphabet, problem);
    render_state(&mut out, &state, &alphabet);
    if let Some(path) = &flags.cache {
        match state.save(path) {
            Ok(()) => {
                let _ = writeln!(out, "cache: written {}", path.display());
            }
            Err(e) => return fail(EXIT_RUNTIME, e.to_string()),
        }
    }
    RunOutput {
        report: out,
        exit: EXIT_OK,
    }
}

fn cmd_member(problem: &ProblemFile, flags: &Flags, target: &str, verdict: bool) -> RunOutput {
    let alphabet = match require_alphabet(problem) {
        Ok(a) => a,
        Err(e) => return e,
    };
    let parsed = match parse_target(problem, &alphabet, target) {
        Ok(t) => t,
        Err(e) => return e,
    };
    let needed = parsed
        .encoded()
        .keys()
        .map(|w| w.len())
        .max()
        .unwrap_or(0);
    let bound = flags
        .max_deg
        .unwrap_or(needed + max_relation_degree(problem));
    let (state, reused) = match obtain_state(problem, &alphabet, bound, needed, flags) {
        Ok(s) => s,
        Err(e) => return e,
    };
    let (outcome, nf) = replication::decide_with_state(&state, parsed.encoded());
    let mut out = String::new();
    match &parsed {
        Target::Plain(t) => {
            let _ = writeln!(
                out,
                "target: {}",
                text::poly_string(&alphabet, problem.variety, t)
            );
        }
        Target::Replicated(p, e) => {
            let _ = writeln!(out, "target: {}", text::tri_poly_string(&alphabet, p));
            let _ = writeln!(
                out,
                "encoded: {}",
                text::poly_string(&alphabet, problem.variety, e)
            );
        }
    }
    let _ = writeln!(
        out,
        "normal form: {}",
        text::poly_string(&alphabet, problem.variety, &nf)
    );
    let _ = writeln!(out, "certified degree: {}", state.complete_up_to());
    if reused {
        let _ = writeln!(out, "cache: reused");
    }
    if !verdict {
        return RunOutput {
            report: out,
            exit: EXIT_OK,
        };
    }
    let (word, exit) = match outcome {
        Membership::Member => ("member", EXIT_OK),
        Membership::NonMember => ("non-member", EXIT_NON_MEMBER),
        Membership::Inconclusive => ("inconclusive", EXIT_INCONCLUSIVE),
    };
    let _ = writeln!(out, "{word}");
    RunOutput { report: out, exit }
}

fn cmd_basis(problem: &ProblemFile, flags: &Flags) -> RunOutput {
    let alphabet = match require_alphabet(problem) {
        Ok(a) => a,
        Err(e) => return e,
    };
    let Some(max_deg) = flags.max_deg else {
        return fail(EXIT_USAGE, "`basis` requires --max-deg");
    };
    let (state, reused) = match obtain_state(problem, &alphabet, max_deg, max_deg, flags) {
        Ok(s) => s,
        Err(e) => return e,
    };
    let filter = |w: &trigsb::words::Word| match problem.mode {
        ProblemMode::Plain => w.letters().iter().all(|g| !g.is_dotted()),
        ProblemMode::Di => w.dotted_degree() == 1,
        ProblemMode::Tri => w.dotted_degree() >= 1,
    };
    let basis = match state.enumerate_reduced(max_deg, filter) {
        Ok(b) => b,
        Err(e) => return fail(EXIT_DATA, e.to_string()),
    };
    let mut out = String::new();
    let _ = writeln!(
        out,
        "basis up to degree {max_deg} ({} monomials, certified {}):",
        basis.len(),
        state.complete_up_to()
    );
    for w in &basis {
        let _ = writeln!(
            out,
            "{}",
            text::monomial_string(&alphabet, problem.variety, w)
        );
    }
    if reused {
        let _ = writeln!(out, "cache: reused");
    }
    RunOutput {
        report: out,
        exit: EXIT_OK,
    }
}

fn cmd_env_perp(problem: &ProblemFile, flags: &Flags) -> RunOutput {
    let Some(table) = &problem.table else {
        return fail(EXIT_USAGE, "`env-perp` requires a table block");
    };
    let bound = flags.max_deg.unwrap_or(DEFAULT_ENVELOPE_DEGREE);
    let mut out = String::new();
    let _ = writeln!(
        out,
        "table: dim {}, basis {}",
        table.dim(),
        table.labels().join(" > ")
    );
    let report = envelopes::validate_table(table, TableKind::Lie);
    match &report.violation {
        None => {
            let _ = writeln!(out, "validation (lie): ok");
        }
        Some(v) => {
            let _ = writeln!(out, "validation (lie): {v}");
        }
    }
    let p = match envelopes::present_perp(table) {
        Ok(p) => p,
        Err(e) => return fail(EXIT_DATA, e.to_string()),
    };
    let _ = writeln!(out, "relations ({}):", p.relations.len());
    if let Some(a) = &p.alphabet {
        for r in &p.relations {
            let _ = writeln!(out, "{}", text::poly_string(a, p.flavor, r));
        }
    }
    match envelopes::verify_perp_gsb(&p, bound) {
        Ok(v) => {
            let _ = writeln!(out, "gsb verified to degree {bound}: {v}");
        }
        Err(e) => return fail(EXIT_RUNTIME, e.to_string()),
    }
    RunOutput {
        report: out,
        exit: EXIT_OK,
    }
}

fn cmd_env_assoc(problem: &ProblemFile, flags: &Flags) -> RunOutput {
    let Some(table) = &problem.table else {
        return fail(EXIT_USAGE, "`env-assoc` requires a table block");
    };
    let bound = flags.max_deg.unwrap_or(DEFAULT_ENVELOPE_DEGREE);
    let mut out = String::new();
    let _ = writeln!(
        out,
        "table: dim {}, basis {}",
        table.dim(),
        table.labels().join(" > ")
    );
    let report = envelopes::validate_table(table, TableKind::TriLie);
    match &report.violation {
        None => {
            let _ = writeln!(out, "validation (tri-lie): ok");
        }
        Some(v) => {
            let _ = writeln!(out, "validation (tri-lie): {v}");
        }
    }
    let p = match envelopes::present_minus(table) {
        Ok(p) => p,
        Err(e) => return fail(EXIT_DATA, e.to_string()),
    };
    if let Some(split) = &p.split {
        let x0: Vec<&str> = split.x0.iter().map(|(n, _)| n.as_str()).collect();
        let _ = writeln!(
            out,
            "split: X1 = [{}], X0 = [{}]",
            split.x1.join(", "),
            x0.join(", ")
        );
    }
    let _ = writeln!(out, "relations ({}):", p.relations.len());
    if let Some(a) = &p.alphabet {
        for r in &p.relations {
            let _ = writeln!(out, "{}", text::poly_string(a, p.flavor, r));
        }
    }
    let verified = match envelopes::verify_minus_gsb(&p, bound) {
        Ok(v) => v,
        Err(e) => return fail(EXIT_RUNTIME, e.to_string()),
    };
    let _ = writeln!(out, "gsb verified to degree {bound}: {verified}");
    if verified {
        match envelopes::pbw_basis_minus(&p, bound) {
            Ok(pbw) => {
                let counts: Vec<String> = pbw.counts.iter().map(|c| c.to_string()).collect();
                let _ = writeln!(out, "pbw counts by degree: {}", counts.join(" "));
                let _ = writeln!(out, "pbw monomials ({}):", pbw.monomials.len());
                if let Some(a) = &p.alphabet {
                    for w in &pbw.monomials {
                        let _ = writeln!(out, "{}", text::word_string(a, w));
                    }
                }
            }
            Err(e) => return fail(EXIT_RUNTIME, e.to_string()),
        }
    }
    RunOutput {
        report: out,
        exit: EXIT_OK,
    }
}

fn cmd_oracle_member(problem: &ProblemFile, flags: &Flags, target: &str) -> RunOutput {
    let alphabet = match require_alphabet(problem) {
        Ok(a) => a,
        Err(e) => return e,
    };
    let Some(max_deg) = flags.max_deg else {
        return fail(EXIT_USAGE, "`oracle-member` requires --max-deg");
    };
    let parsed = match parse_target(problem, &alphabet, target) {
        Ok(t) => t,
        Err(e) => return e,
    };
    let relations_enc: Vec<TermMap> = match &problem.relations {
        Relations::Plain(v) => v.clone(),
        Relations::Replicated(v) => {
            let mut out = Vec::new();
            for r in v {
                let e = replication::encode(r, problem.variety);
                let fe = replication::phi(&e, problem.variety);
                if !e.is_empty() && !out.contains(&e) {
                    out.push(e);
                }
                if !fe.is_empty() && !out.contains(&fe) {
                    out.push(fe);
                }
            }
            out
        }
    };
    let verdict = match oracle::member_span(
        &relations_enc,
        parsed.encoded(),
        problem.variety,
        &alphabet,
        max_deg,
    ) {
        Ok(v) => v,
        Err(e) => return fail(EXIT_DATA, e.to_string()),
    };
    let mut out = String::new();
    let _ = writeln!(out, "oracle degree bound: {max_deg}");
    let _ = writeln!(out, "member: {verdict}");
    RunOutput {
        report: out,
        exit: if verdict { EXIT_OK } else { EXIT_NON_MEMBER },
    }
}

fn cmd_oracle_dim(problem: &ProblemFile, flags: &Flags) -> RunOutput {
    let alphabet = match require_alphabet(problem) {
        Ok(a) => a,
        Err(e) => return e,
    };
    let Some(max_deg) = flags.max_deg else {
        return fail(EXIT_USAGE, "`oracle-dim` requires --max-deg");
    };
    let counts = match problem.mode {
        ProblemMode::Plain => {
            let letters = alphabet.base_desc();
            let monomials = oracle::monomial_basis(&letters, problem.variety, max_deg);
            let mut counts = vec![0usize; max_deg];
            for w in &monomials {
                counts[w.len() - 1] += 1;
            }
            counts
        }
        ProblemMode::Di => {
            oracle::free_dimension(Mode::Di, problem.variety, alphabet.base_len(), max_deg)
        }
        ProblemMode::Tri => {
            oracle::free_dimension(Mode::Tri, problem.variety, alphabet.base_len(), max_deg)
        }
    };
    let mut out = String::new();
    let _ = writeln!(
        out,
        "free dimensions ({} {}, {} generators):",
        problem.variety.as_str(),
        problem.mode.as_str(),
        alphabet.base_len()
    );
    for (i, c) in counts.iter().enumerate() {
        let _ = writeln!(out, "degree {}: {}", i + 1, c);
    }
    RunOutput {
        report: out,
        exit: EXIT_OK,
    }
}

// ------------------------------------------------------------ arg parsing

/// Parse command-line arguments (without the program name).
pub fn parse_args(args: &[String]) -> Result<(Command, PathBuf, Flags), String> {
    let mut it = args.iter();
    let cmd_name = it.next().ok_or_else(usage)?;
    let mut target: Option<String> = None;
    let mut file: Option<PathBuf> = None;
    let mut flags = Flags::default();
    while let Some(arg) = it.next() {
        match arg.as_str() {
            "--target" => {
                target = Some(it.next().ok_or("--target needs a value")?.clone());
            }
            "--max-deg" => {
                let v = it.next().ok_or("--max-deg needs a value")?;
                flags.max_deg = Some(v.parse().map_err(|_| "--max-deg needs an integer")?);
            }
            "--max-steps" => {
                let v = it.next().ok_or("--max-steps needs a value")?;
                flags.max_steps = Some(v.parse().map_err(|_| "--max-steps needs an integer")?);
            }
            "--cache" => {
                flags.cache = Some(PathBuf::from(it.next().ok_or("--cache needs a value")?));
            }
            other if !other.starts_with('-') && file.is_none() => {
                file = Some(PathBuf::from(other));
            }
            other => return Err(format!("unknown argument `{other}`\n{}", usage())),
        }
    }
    let file = file.ok_or("missing problem file")?;
    let cmd = match cmd_name.as_str() {
        "complete" => Command::Complete,
        "member" => Command::Member {
            target: target.ok_or("`member` requires --target")?,
        },
        "nf" => Command::Nf {
            target: target.ok_or("`nf` requires --target")?,
        },
        "basis" => Command::Basis,
        "env-perp" => Command::EnvPerp,
        "env-assoc" => Command::EnvAssoc,
        "oracle-member" => Command::OracleMember {
            target: target.ok_or("`oracle-member` requires --target")?,
        },
        "oracle-dim" => Command::OracleDim,
        other => return Err(format!("unknown command `{other}`\n{}", usage())),
    };
    Ok((cmd, file, flags))
}

pub fn usage() -> String {
    "usage: trigsb <command> <problem-file> [flags]\n\
     commands: complete | member --target EXPR | nf --target EXPR | basis --max-deg D |\n\
     \x20         env-perp | env-assoc | oracle-member --target EXPR --max-deg D | oracle-dim --max-deg D\n\
     flags: --max-deg D   --max-steps N   --cache PATH"
        .to_string()
}
