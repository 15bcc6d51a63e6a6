use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use quintic_core::ade::tables::minuscule_table;
use quintic_core::ade::{parse_int_list, Family, RootSystem, Weight};
use quintic_core::flopsim::{orbit_starts, FiberState, TieBreak};
use quintic_core::localint::config::{by_figure, classify_config, enumerate, realize, ConfigOutcome, MAX_K, MAX_RANK};
use quintic_core::localint::{GraphCurve, Orientation};
use quintic_core::modulidim::{locus_dimension, named_types, Base, DClass, LocusSpec, PointSpec};
use quintic_core::pic::{hirzebruch, projective_plane, quadric, SurfaceLattice};
use quintic_core::qsing::{enumerate_wahl, hj_eval, hj_expand, wahl_string, Fraction, TString, TStringReport};
use quintic_core::rational::{format_q, parse_q};
use quintic_core::verify;

#[derive(Parser)]
#[command(name = "quintic", version, about = "Exact lattice, weight and intersection computations for Wahl degenerations")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, env = "QUINTIC_FORMAT", default_value = "text")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Wahl strings: build from (n, a), classify a string, or enumerate.
    Wahl(WahlArgs),
    /// Hirzebruch–Jung continued fractions.
    Hj(HjArgs),
    /// Picard lattice of a rational surface and its blowups.
    Pic(PicArgs),
    /// Weights of an ADE root system.
    Lattice(LatticeArgs),
    /// Reduce a degenerating curve class by flops.
    Flop(FlopArgs),
    /// Local intersection of a branch germ with a smooth germ.
    Local(LocalArgs),
    /// Dimension of a locus of triples.
    Dims(DimsArgs),
    /// Run every reproduction check.
    VerifyPaper,
}

#[derive(Args)]
#[group(required = true, multiple = true)]
struct WahlArgs {
    #[arg(long, requires = "a")]
    n: Option<i64>,
    #[arg(long, requires = "n")]
    a: Option<i64>,
    /// Comma-separated entries, e.g. 2,5.
    #[arg(long, conflicts_with_all = ["n", "a", "enumerate"])]
    string: Option<String>,
    /// List every Wahl string up to this length.
    #[arg(long, conflicts_with_all = ["n", "a"])]
    enumerate: Option<usize>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct HjArgs {
    /// `p/q` with p > q >= 1 coprime.
    #[arg(long)]
    fraction: Option<String>,
    /// Comma-separated entries to evaluate.
    #[arg(long)]
    string: Option<String>,
}

#[derive(Args)]
struct PicArgs {
    /// F<d>, Q (the quadric) or P2.
    #[arg(long, default_value = "F0")]
    surface: String,
    /// Comma-separated labels of points to blow up.
    #[arg(long)]
    blowups: Option<String>,
    /// A class such as D0:1,G:2,E1:-1.
    #[arg(long)]
    class: Option<String>,
}

#[derive(Args)]
struct LatticeArgs {
    /// E.g. A3, E7 or A1+A2.
    #[arg(long)]
    system: String,
    /// Dynkin labels of a weight.
    #[arg(long, conflicts_with = "divisor")]
    weight: Option<String>,
    /// Intersection numbers C·E_i, giving the weight of C.
    #[arg(long)]
    divisor: Option<String>,
    /// Report which fundamental weights are minuscule.
    #[arg(long)]
    minuscule: bool,
}

#[derive(Args)]
struct FlopArgs {
    #[arg(long)]
    system: String,
    /// Dynkin labels of ω.
    #[arg(long)]
    omega: String,
    /// Starting coefficients a_i (defaults to zero).
    #[arg(long, conflicts_with = "starts")]
    a: Option<String>,
    /// smallest, largest or most-negative.
    #[arg(long, default_value = "smallest")]
    policy: String,
    /// List the valid starting coefficients up to this height instead.
    #[arg(long)]
    starts: Option<i64>,
}

#[derive(Args)]
struct LocalArgs {
    /// ADE type such as A3 or D5.
    #[arg(long, required_unless_present = "enumerate")]
    sing: Option<String>,
    /// x-f(y) or y-g(x).
    #[arg(long, default_value = "x-f(y)")]
    orientation: String,
    /// Coefficients of t^0, t^1, … of f.
    #[arg(long, conflicts_with = "realize")]
    f: Option<String>,
    /// Find a germ with this multiplicity or report that none exists.
    #[arg(long)]
    realize: Option<u32>,
    /// Sweep every form and germ, grouped by figure.
    #[arg(long, conflicts_with_all = ["sing", "f", "realize"])]
    enumerate: bool,
}

#[derive(Args)]
struct DimsArgs {
    /// A named type: 1, 1', 1'', 1''', 2a, 2a', 2a'', 2b, or d-in-b.
    #[arg(long = "type", conflicts_with_all = ["base", "class", "points"])]
    type_label: Option<String>,
    /// F0 or cone.
    #[arg(long, default_value = "F0")]
    base: String,
    /// Delta or Gamma.
    #[arg(long, default_value = "Delta")]
    class: String,
    /// Points such as smooth@2,node@2,A3@4:2:4.
    #[arg(long)]
    points: Option<String>,
    #[arg(long)]
    d_in_b: bool,
}

/// A command's result, as JSON and as text.
struct Output {
    json: Value,
    text: String,
    ok: bool,
}

impl Output {
    fn ok(json: Value, text: String) -> Self {
        Output { json, text, ok: true }
    }
}

type Res = Result<Output, quintic_core::Error>;

fn list(s: &str) -> quintic_core::Result<Vec<i64>> {
    parse_int_list(s)
}

fn wahl(args: &WahlArgs) -> Res {
    if let Some(r) = args.enumerate {
        let all = enumerate_wahl(r);
        let text = all.iter().map(|t| t.to_string()).collect::<Vec<_>>().join("\n");
        let entries: Vec<&[i64]> = all.iter().map(|t| t.entries()).collect();
        return Ok(Output::ok(json!({ "max_length": r, "count": all.len(), "strings": entries }), text));
    }
    let t = match (&args.string, args.n, args.a) {
        (Some(s), _, _) => TString::new(list(s)?)?,
        (None, Some(n), Some(a)) => wahl_string(n, a)?,
        _ => unreachable!("clap enforces one input"),
    };
    let rep = TStringReport::new(&t)?;
    let disc: Vec<String> = rep.discrepancies.values().iter().map(format_q).collect();
    let text = format!(
        "string        {t}\nclass         {}\nfraction      {}\ndiscrepancies ({})",
        class_text(&rep.class),
        hj_eval(&t),
        disc.join(", ")
    );
    Ok(Output::ok(serde_json::to_value(&rep).expect("serializable"), text))
}

fn class_text(c: &quintic_core::qsing::SingularityClass) -> String {
    use quintic_core::qsing::SingularityClass::*;
    match c {
        NotT => "not a T-singularity".into(),
        T { d, n, a } => format!("T-singularity 1/{}({}, {})", d * n * n, 1, d * n * a - 1),
        Wahl { n, a } => format!("Wahl 1/{}(1, {}) with n = {n}, a = {a}", n * n, n * a - 1),
    }
}

fn hj(args: &HjArgs) -> Res {
    if let Some(f) = &args.fraction {
        let f: Fraction = f.parse()?;
        let t = hj_expand(&f)?;
        return Ok(Output::ok(json!({ "fraction": f.to_string(), "entries": t.entries() }), format!("{f} = {t}")));
    }
    let t = TString::new(list(args.string.as_deref().expect("clap enforces one input"))?)?;
    let f = hj_eval(&t);
    Ok(Output::ok(json!({ "fraction": f.to_string(), "entries": t.entries() }), format!("{t} = {f}")))
}

fn surface(name: &str) -> quintic_core::Result<SurfaceLattice> {
    match name {
        "Q" | "quadric" => Ok(quadric()),
        "P2" | "plane" => Ok(projective_plane()),
        _ => {
            let d = name
                .strip_prefix('F')
                .and_then(|d| d.parse::<i64>().ok())
                .filter(|d| *d >= 0)
                .ok_or_else(|| quintic_core::Error::Parse(format!("unknown surface `{name}`")))?;
            Ok(hirzebruch(d))
        }
    }
}

fn pic(args: &PicArgs) -> Res {
    let mut lat = surface(&args.surface)?;
    if let Some(b) = &args.blowups {
        let labels: Vec<&str> = b.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
        lat = lat.blow_up_all(&labels)?;
    }
    let mut text = format!("lattice {}\nbasis   {}\ngram", lat.id, lat.basis_labels.join(" "));
    for row in &lat.gram {
        text += &format!("\n  {}", row.iter().map(|v| format!("{v:>3}")).collect::<String>());
    }
    text += &format!("\nK       {}", lat.display(&lat.canonical_class()));
    let mut out = json!({ "lattice": lat });
    if let Some(c) = &args.class {
        let mut terms = Vec::new();
        for part in c.split(',') {
            let (l, v) = part
                .split_once(':')
                .ok_or_else(|| quintic_core::Error::Parse(format!("bad term `{part}` (expected LABEL:COEFF)")))?;
            let v: i64 = v.trim().parse().map_err(|_| quintic_core::Error::Parse(part.to_string()))?;
            terms.push((l.trim(), v));
        }
        let d = lat.class_of(&terms)?;
        let dd = lat.self_intersection(&d)?;
        let kd = lat.intersect(&lat.canonical_class(), &d)?;
        let genus = lat.adjunction_genus(&d)?;
        let chi = lat.riemann_roch_chi(&d)?;
        text += &format!(
            "\nclass   {}\nD^2     {dd}\nK.D     {kd}\ngenus   {}\nchi     {chi}",
            lat.display(&d),
            format_q(&genus)
        );
        out["class"] = json!({
            "coefficients": d.coefficients,
            "self_intersection": dd,
            "k_dot": kd,
            "arithmetic_genus": format_q(&genus),
            "chi": chi,
        });
    }
    Ok(Output::ok(out, text))
}

fn lattice(args: &LatticeArgs) -> Res {
    let rs: RootSystem = args.system.parse()?;
    let mut out = json!({ "system": rs.name(), "rank": rs.rank() });
    let mut text = format!("system {} (rank {})", rs.name(), rs.rank());
    let w = match (&args.weight, &args.divisor) {
        (Some(w), _) => Some(Weight(list(w)?)),
        (None, Some(d)) => Some(rs.weight_of_divisor(&list(d)?)?),
        _ => None,
    };
    if let Some(w) = w {
        if w.0.len() != rs.rank() {
            return Err(quintic_core::Error::LengthMismatch { expected: rs.rank(), got: w.0.len() });
        }
        let rep = rs.report(&w);
        let amb: Vec<String> = rep.weight.iter().map(format_q).collect();
        text += &format!(
            "\nlabels   {:?}\nambient  ({})\nnorm^2   {}\ndominant {}",
            rep.labels,
            amb.join(", "),
            format_q(&rep.norm2),
            rep.dominant
        );
        out["weight"] = serde_json::to_value(&rep).expect("serializable");
    }
    if args.minuscule {
        let nodes: Vec<usize> = (0..rs.rank()).filter(|&i| rs.is_minuscule(i).unwrap_or(false)).map(|i| i + 1).collect();
        text += &format!("\nminuscule fundamental weights: {nodes:?}");
        out["minuscule"] = json!(nodes);
        if let [c] = rs.components() {
            out["table"] = json!(minuscule_table(c.family, c.rank));
        }
    }
    if args.weight.is_none() && args.divisor.is_none() && !args.minuscule {
        text += &format!("\npositive roots {}", rs.positive_roots().len());
        out["positive_roots"] = json!(rs.positive_roots().len());
    }
    Ok(Output::ok(out, text))
}

fn flop(args: &FlopArgs) -> Res {
    let rs: RootSystem = args.system.parse()?;
    let omega = Weight(list(&args.omega)?);
    if omega.0.len() != rs.rank() {
        return Err(quintic_core::Error::LengthMismatch { expected: rs.rank(), got: omega.0.len() });
    }
    if let Some(h) = args.starts {
        let starts = orbit_starts(&rs, &omega, h)?;
        let text = starts.iter().map(|a| format!("{a:?}")).collect::<Vec<_>>().join("\n");
        return Ok(Output::ok(json!({ "omega": omega.0, "height_bound": h, "starts": starts }), text));
    }
    let policy: TieBreak = args.policy.parse()?;
    let a = match &args.a {
        Some(a) => list(a)?,
        None => vec![0; rs.rank()],
    };
    let trace = FiberState::new(&rs, omega, a)?.reduce(policy)?;
    let rep = trace.report();
    let text = format!(
        "steps    {:?}\nfinal a  {:?}\nfinal mu {:?}\ndominant {}",
        rep.steps, rep.final_a, rep.final_mu, rep.final_dominant
    );
    Ok(Output::ok(serde_json::to_value(&rep).expect("serializable"), text))
}

fn parse_sing(s: &str) -> quintic_core::Result<(Family, usize)> {
    let bad = || quintic_core::Error::Parse(format!("bad singularity `{s}` (expected e.g. D5)"));
    let family: Family = s.get(..1).ok_or_else(bad)?.parse()?;
    let n: usize = s[1..].parse().map_err(|_| bad())?;
    if !family.valid_rank(n) {
        return Err(quintic_core::Error::InvalidRootSystem { family: family.letter(), rank: n });
    }
    Ok((family, n))
}

fn outcome_text(o: &ConfigOutcome) -> String {
    match o {
        ConfigOutcome::Record(r) => format!(
            "{} vs {} ({})\nmult       {}\nseparation {}\nsingular after first blowup {}\nfigure     {}{}",
            r.sing,
            r.f,
            if r.transversal { "transversal" } else { "tangent" },
            r.mult,
            r.separation,
            r.post_blowup_singular,
            r.figure.as_deref().unwrap_or("-"),
            r.even_figure.as_ref().map(|e| format!("\neven row   {e}")).unwrap_or_default()
        ),
        ConfigOutcome::Contained { sing, f } => format!("{f} is a component of {sing}"),
        ConfigOutcome::Impossible { reason, .. } => format!("impossible: {reason}"),
    }
}

fn local(args: &LocalArgs) -> Res {
    if args.enumerate {
        let records = enumerate(MAX_RANK, MAX_K)?;
        let groups = by_figure(&records);
        let text = groups
            .iter()
            .map(|(fig, rs)| {
                let mut sings: Vec<&str> = rs.iter().map(|r| r.sing.as_str()).collect();
                sings.dedup();
                format!("{fig:<20} {:>4} germs  {}", rs.len(), sings.join(" "))
            })
            .collect::<Vec<_>>()
            .join("\n");
        return Ok(Output::ok(serde_json::to_value(&groups).expect("serializable"), text));
    }
    let (family, n) = parse_sing(args.sing.as_deref().expect("clap requires sing"))?;
    let outcome = if let Some(m) = args.realize {
        realize(family, n, m)?
    } else {
        let orientation = match args.orientation.as_str() {
            "x-f(y)" | "x" => Orientation::XOfY,
            "y-g(x)" | "y" => Orientation::YOfX,
            o => return Err(quintic_core::Error::Parse(format!("unknown orientation `{o}`"))),
        };
        let coeffs = args
            .f
            .as_deref()
            .unwrap_or("0,1,1")
            .split(',')
            .map(|c| parse_q(c.trim()))
            .collect::<quintic_core::Result<Vec<_>>>()?;
        classify_config(family, n, &GraphCurve::new(orientation, coeffs)?)?
    };
    let ok = !matches!(outcome, ConfigOutcome::Impossible { .. });
    Ok(Output { text: outcome_text(&outcome), json: serde_json::to_value(&outcome).expect("serializable"), ok })
}

fn dims(args: &DimsArgs) -> Res {
    let spec = match args.type_label.as_deref() {
        Some("d-in-b") => LocusSpec::d_in_b(Base::F0, DClass::Delta),
        Some(t) => named_types()
            .into_iter()
            .find(|(l, _)| *l == t)
            .map(|(_, s)| s)
            .ok_or_else(|| quintic_core::Error::InvalidLocus(format!("unknown type `{t}`")))?,
        None => {
            let base: Base = args.base.parse()?;
            let class: DClass = args.class.parse()?;
            if args.d_in_b {
                LocusSpec::d_in_b(base, class)
            } else {
                let points = args
                    .points
                    .as_deref()
                    .ok_or_else(|| quintic_core::Error::InvalidLocus("--points or --type is required".into()))?
                    .split(',')
                    .map(|p| p.trim().parse::<PointSpec>())
                    .collect::<quintic_core::Result<Vec<_>>>()?;
                LocusSpec::new(base, class, points)
            }
        }
    };
    let rep = locus_dimension(&spec)?;
    let mut text = format!("{} = {}", rep.formula(), rep.total);
    if let Some(l) = &rep.type_label {
        text += &format!("  (type {l})");
    }
    if !rep.unverified.is_empty() {
        text += &format!("\nunverified codimensions: {}", rep.unverified.join(", "));
    }
    Ok(Output::ok(serde_json::to_value(&rep).expect("serializable"), text))
}

fn verify_paper() -> Res {
    let checks = verify::run_all();
    let ok = checks.iter().all(|c| c.pass);
    let text = checks.iter().map(|c| format!("{}\n    [{}]", c.line(), c.anchor)).collect::<Vec<_>>().join("\n");
    Ok(Output { json: json!({ "pass": ok, "checks": checks }), text, ok })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Wahl(a) => wahl(a),
        Command::Hj(a) => hj(a),
        Command::Pic(a) => pic(a),
        Command::Lattice(a) => lattice(a),
        Command::Flop(a) => flop(a),
        Command::Local(a) => local(a),
        Command::Dims(a) => dims(a),
        Command::VerifyPaper => verify_paper(),
    };
    match result {
        Ok(out) => {
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&out.json).expect("serializable")),
                Format::Text => println!("{}", out.text),
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            match cli.format {
                Format::Json => println!("{}", json!({ "error": e.to_string() })),
                Format::Text => eprintln!("error: {e}"),
            }
            ExitCode::from(1)
        }
    }
}
