//! Command-line front end. [`run`] is the whole program minus process exit,
//! so tests can drive it directly.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::algebra::{parse_rational, MonomialOrder, Rational, Ring, RingRef};
use crate::charp::{
    is_sharply_fpure, is_strongly_fregular, sigma, tau_b_report, verify_monomial_theorem, QDivisor,
    SigmaOptions, SigmaResult, Triple,
};
use crate::divisor::format_rational;
use crate::error::{Error, Result};
use crate::frobenius::frobenius_root;
use crate::groebner::Ideal;
use crate::newton::{jumping_candidates, lct_monomial, newton_ideal, MembershipMode, MonomialIdeal};
use crate::parse::{format_monomial_ideal, parse_divisor, parse_generators, parse_monomial_ideal};
use crate::restriction::{check_restriction, RestrictionProblem};

#[derive(Debug, Parser)]
#[command(name = "fpure", version, about = "Non-F-pure ideals, test ideals and Newton polyhedra over F_p")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Non-F-pure ideal of (R, divisor; ideal^t)
    Sigma(Common),
    /// Big test ideal of (R, divisor; ideal^t)
    Tau(Common),
    /// Frobenius root of the ideal generated by --ideal
    Froot(Common),
    /// Newton-polyhedron ideal of a monomial ideal at t
    Newton(Common),
    /// Log canonical threshold of a monomial ideal
    Lct(Common),
    /// Jumping-number candidates of a monomial ideal up to t
    Jumps(Common),
    /// Compare both sides of the restriction theorem along --hyperplane
    RestrictCheck(Common),
    /// Is the pair sharply F-pure?
    Fpure(Common),
    /// Is the pair strongly F-regular?
    Fregular(Common),
    /// Compare sigma of a monomial ideal with its Newton ideal
    CompareMonomial(Common),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Closed,
    Interior,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OrderArg {
    Lex,
    Grevlex,
}

#[derive(Debug, Args)]
struct Common {
    /// Characteristic of the coefficient field
    #[arg(long)]
    prime: Option<u64>,
    /// Comma-separated variable names
    #[arg(long, value_delimiter = ',', required = true)]
    vars: Vec<String>,
    /// Divisor such as "1*(x^3 - y^2) + 1/2*(y)"
    #[arg(long)]
    divisor: Option<String>,
    /// Ideal such as "[x^2, y^3]"
    #[arg(long)]
    ideal: Option<String>,
    /// Exponent t of the ideal
    #[arg(long = "t")]
    t: Option<String>,
    #[arg(long, value_enum, default_value_t = ModeArg::Closed)]
    mode: ModeArg,
    #[arg(long, default_value_t = SigmaOptions::default().e_max)]
    emax: u32,
    #[arg(long, default_value_t = SigmaOptions::default().probe)]
    probe: u32,
    #[arg(long, default_value_t = SigmaOptions::default().window)]
    window: usize,
    #[arg(long, default_value_t = SigmaOptions::default().n_max)]
    nmax: usize,
    #[arg(long, value_enum, default_value_t = OrderArg::Grevlex)]
    order: OrderArg,
    /// Frobenius exponent for froot
    #[arg(long, default_value_t = 1)]
    e: u32,
    /// Variable x_k defining the hyperplane D = V(x_k)
    #[arg(long)]
    hyperplane: Option<String>,
    #[arg(long)]
    json: bool,
}

/// Exit code and captured streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `argv` (including the program name) and runs the command.
///
/// Exit codes: 0 success, 1 malformed input, 2 non-convergence or an
/// exceeded degree budget.
pub fn run<I, S>(argv: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match execute(&cli.command) {
        Ok(report) => Outcome {
            code: 0,
            stdout: report,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: exit_code(&e),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NonConvergence { .. } | Error::DegreeGuard(_) => 2,
        _ => 1,
    }
}

struct Context<'a> {
    name: &'static str,
    args: &'a Common,
    ring: RingRef,
}

/// What a command produced, before rendering.
struct Report {
    lines: Vec<String>,
    result: Value,
    diagnostics: Option<Value>,
}

fn execute(command: &Command) -> Result<String> {
    let (name, args) = match command {
        Command::Sigma(a) => ("sigma", a),
        Command::Tau(a) => ("tau", a),
        Command::Froot(a) => ("froot", a),
        Command::Newton(a) => ("newton", a),
        Command::Lct(a) => ("lct", a),
        Command::Jumps(a) => ("jumps", a),
        Command::RestrictCheck(a) => ("restrict-check", a),
        Command::Fpure(a) => ("fpure", a),
        Command::Fregular(a) => ("fregular", a),
        Command::CompareMonomial(a) => ("compare-monomial", a),
    };
    let needs_prime = !matches!(name, "newton" | "lct" | "jumps");
    let p = match args.prime {
        Some(p) => p,
        None if needs_prime => return Err(Error::InvalidInput(format!("{name} needs --prime"))),
        None => 2,
    };
    let names: Vec<&str> = args.vars.iter().map(|s| s.trim()).collect();
    let order = match args.order {
        OrderArg::Lex => MonomialOrder::lex(names.len()),
        OrderArg::Grevlex => MonomialOrder::grevlex(names.len()),
    };
    let ring = Ring::with_order(p, &names, order)?;
    let cx = Context { name, args, ring };
    let report = match name {
        "sigma" => cx.sigma()?,
        "tau" => cx.tau()?,
        "froot" => cx.froot()?,
        "newton" => cx.newton()?,
        "lct" => cx.lct()?,
        "jumps" => cx.jumps()?,
        "restrict-check" => cx.restrict()?,
        "fpure" => cx.fpure()?,
        "fregular" => cx.fregular()?,
        _ => cx.compare()?,
    };
    Ok(if args.json {
        cx.render_json(report)
    } else {
        let mut text = report.lines.join("\n");
        text.push('\n');
        text
    })
}

fn generators(ideal: &Ideal) -> Result<Vec<String>> {
    Ok(ideal.canonical()?.generators().iter().map(|g| g.to_string()).collect())
}

fn show(ideal: &Ideal) -> Result<String> {
    Ok(ideal.canonical()?.to_string())
}

fn diagnostics(r: &SigmaResult) -> Value {
    json!({ "n": r.iterations, "e_max": r.e_max_used, "probe_stable": r.probe_stable })
}

fn diagnostics_line(r: &SigmaResult) -> String {
    format!(
        "n = {}, e_max = {}, probe_stable = {}",
        r.iterations, r.e_max_used, r.probe_stable
    )
}

impl Context<'_> {
    fn options(&self) -> SigmaOptions {
        SigmaOptions {
            e_max: self.args.emax,
            probe: self.args.probe,
            n_max: self.args.nmax,
            window: self.args.window,
        }
    }

    fn t(&self) -> Result<Rational> {
        match &self.args.t {
            Some(s) => parse_rational(s),
            None => Ok(Rational::from_integer(1.into())),
        }
    }

    fn divisor(&self) -> Result<QDivisor> {
        match &self.args.divisor {
            Some(s) => parse_divisor(s, &self.ring),
            None => Ok(QDivisor::empty(&self.ring)),
        }
    }

    fn monomial_ideal(&self) -> Result<Option<MonomialIdeal>> {
        self.args
            .ideal
            .as_deref()
            .map(|s| parse_monomial_ideal(s, &self.ring))
            .transpose()
    }

    fn required_monomial_ideal(&self) -> Result<MonomialIdeal> {
        self.monomial_ideal()?
            .ok_or_else(|| Error::InvalidInput(format!("{} needs --ideal", self.name)))
    }

    fn triple(&self) -> Result<Triple> {
        Triple::new(self.divisor()?, self.monomial_ideal()?, self.t()?)
    }

    fn sigma(&self) -> Result<Report> {
        let res = sigma(&self.triple()?, &self.options())?;
        Ok(Report {
            lines: vec![format!("sigma = {}", show(&res.ideal)?), diagnostics_line(&res)],
            result: json!({ "generators": generators(&res.ideal)? }),
            diagnostics: Some(diagnostics(&res)),
        })
    }

    fn tau(&self) -> Result<Report> {
        let res = tau_b_report(&self.triple()?, &self.options())?;
        Ok(Report {
            lines: vec![format!("tau_b = {}", show(&res.ideal)?), diagnostics_line(&res)],
            result: json!({ "generators": generators(&res.ideal)? }),
            diagnostics: Some(diagnostics(&res)),
        })
    }

    fn froot(&self) -> Result<Report> {
        let text = self
            .args
            .ideal
            .as_deref()
            .ok_or_else(|| Error::InvalidInput("froot needs --ideal".into()))?;
        let ideal = Ideal::new(&self.ring, parse_generators(text, &self.ring)?)?;
        let root = frobenius_root(&ideal, self.args.e)?;
        Ok(Report {
            lines: vec![format!("froot = {}", show(&root)?)],
            result: json!({ "generators": generators(&root)? }),
            diagnostics: None,
        })
    }

    fn mode(&self) -> MembershipMode {
        match self.args.mode {
            ModeArg::Closed => MembershipMode::Closed,
            ModeArg::Interior => MembershipMode::Interior,
        }
    }

    fn newton(&self) -> Result<Report> {
        let a = self.required_monomial_ideal()?;
        let m = newton_ideal(&a, &self.t()?, self.mode())?;
        let ideal = m.to_ideal(&self.ring)?;
        Ok(Report {
            lines: vec![format!("newton = {}", show(&ideal)?)],
            result: json!({ "generators": generators(&ideal)? }),
            diagnostics: None,
        })
    }

    fn lct(&self) -> Result<Report> {
        let c = format_rational(&lct_monomial(&self.required_monomial_ideal()?)?);
        Ok(Report {
            lines: vec![c.clone()],
            result: json!({ "value": c }),
            diagnostics: None,
        })
    }

    fn jumps(&self) -> Result<Report> {
        let a = self.required_monomial_ideal()?;
        let values: Vec<String> = jumping_candidates(&a, &self.t()?)?
            .iter()
            .map(format_rational)
            .collect();
        Ok(Report {
            lines: vec![format!("jumps = {}", values.join(", "))],
            result: json!({ "values": values }),
            diagnostics: None,
        })
    }

    fn restrict(&self) -> Result<Report> {
        let name = self
            .args
            .hyperplane
            .as_deref()
            .ok_or_else(|| Error::InvalidInput("restrict-check needs --hyperplane".into()))?;
        let k = self
            .ring
            .var_index(name)
            .ok_or_else(|| Error::InvalidInput(format!("unknown hyperplane variable '{name}'")))?;
        let problem = RestrictionProblem::new(k, self.divisor()?, self.options())?;
        let report = check_restriction(&problem)?;
        let (lhs, rhs) = (show(&report.lhs)?, show(&report.rhs)?);
        let verdict = if report.equal { "EQUAL" } else { "MISMATCH" };
        let mut lines = vec![
            format!("lhs = {lhs}, rhs = {rhs}, {verdict}"),
            format!("sigma(R, D + B) = {}", show(&report.ambient)?),
            format!("lhs: {}", diagnostics_line(&report.lhs_diagnostics)),
            format!("rhs: {}", diagnostics_line(&report.rhs_diagnostics)),
        ];
        if !report.equal {
            lines.push("MISMATCH: the two sides differ on an input satisfying the hypotheses".into());
        }
        Ok(Report {
            lines,
            result: json!({
                "generators": generators(&report.lhs)?,
                "lhs": generators(&report.lhs)?,
                "rhs": generators(&report.rhs)?,
                "ambient": generators(&report.ambient)?,
                "equal": report.equal,
            }),
            diagnostics: Some(json!({
                "lhs": diagnostics(&report.lhs_diagnostics),
                "rhs": diagnostics(&report.rhs_diagnostics),
            })),
        })
    }

    fn fpure(&self) -> Result<Report> {
        let v = is_sharply_fpure(&self.triple()?, &self.options())?;
        Ok(Report {
            lines: vec![format!("sharply F-pure = {v}")],
            result: json!({ "value": v }),
            diagnostics: None,
        })
    }

    fn fregular(&self) -> Result<Report> {
        let v = is_strongly_fregular(&self.triple()?, &self.options())?;
        Ok(Report {
            lines: vec![format!("strongly F-regular = {v}")],
            result: json!({ "value": v }),
            diagnostics: None,
        })
    }

    fn compare(&self) -> Result<Report> {
        let a = self.required_monomial_ideal()?;
        let rep = verify_monomial_theorem(&a, &self.t()?, self.ring.characteristic(), &self.options())?;
        let sigma_ideal = rep.sigma.to_ring(&self.ring)?;
        let newton = rep.newton.to_ideal(&self.ring)?;
        let verdict = if rep.equal { "EQUAL" } else { "MISMATCH" };
        Ok(Report {
            lines: vec![
                format!("sigma = {}, newton = {}, {verdict}", show(&sigma_ideal)?, show(&newton)?),
                format!("newton ideal = {}", format_monomial_ideal(&rep.newton, &self.ring)),
                diagnostics_line(&rep.diagnostics),
            ],
            result: json!({
                "generators": generators(&sigma_ideal)?,
                "newton": generators(&newton)?,
                "equal": rep.equal,
            }),
            diagnostics: Some(diagnostics(&rep.diagnostics)),
        })
    }

    fn inputs(&self) -> Value {
        let a = self.args;
        let mut m = Map::new();
        m.insert("vars".into(), json!(a.vars));
        m.insert("prime".into(), json!(self.ring.characteristic()));
        let mut opt = |key: &str, v: &Option<String>| {
            if let Some(s) = v {
                m.insert(key.into(), json!(s));
            }
        };
        opt("divisor", &a.divisor);
        opt("ideal", &a.ideal);
        opt("t", &a.t);
        opt("hyperplane", &a.hyperplane);
        m.insert("mode".into(), json!(format!("{:?}", a.mode).to_lowercase()));
        m.insert("order".into(), json!(format!("{:?}", a.order).to_lowercase()));
        m.insert("emax".into(), json!(a.emax));
        m.insert("probe".into(), json!(a.probe));
        m.insert("window".into(), json!(a.window));
        m.insert("nmax".into(), json!(a.nmax));
        if self.name == "froot" {
            m.insert("e".into(), json!(a.e));
        }
        Value::Object(m)
    }

    fn render_json(&self, report: Report) -> String {
        let value = json!({
            "command": self.name,
            "inputs": self.inputs(),
            "result": report.result,
            "diagnostics": report.diagnostics.unwrap_or(Value::Null),
        });
        let mut s = serde_json::to_string_pretty(&value).expect("json");
        s.push('\n');
        s
    }
}
