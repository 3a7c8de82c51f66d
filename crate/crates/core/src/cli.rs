//! Command-line front end. Every command produces a one-shot text rendering
//! and a JSON [`Record`]; output is deterministic.

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::gamma::{
    branch_distribution, decompose, enumerate_truncated, gamma_node_classify, level_classify,
    prob, same_unit, Budget, GammaNode,
};
use crate::ordinal::{ExtOrdinal, Ordinal, Style};
use crate::rational::{parse_rational, render_rational, Rational};
use crate::record::Record;
use crate::szlenk::{
    attainable, family_bound, sz_c_interval, sz_ck, sz_convex_hull, sz_frak_g, sz_frak_s,
    sz_max_rule, sz_union_bound, BoundKind, DerivationBound, IndexKind, MaxContext,
    NormingParams,
};
use crate::tree::{
    cb_interval_derivative, cb_interval_index, embed_exists_bruteforce, monotone_embed,
    tree_order, FiniteTree, TreeDescriptor,
};

/// Environment variable holding the default output format.
pub const FORMAT_ENV: &str = "SZLENK_FORMAT";

#[derive(Parser, Debug)]
#[command(name = "szlenk", version, about = "Exact ordinal, tree and Szlenk-index calculator")]
pub struct Cli {
    #[arg(long, global = true, value_enum, env = FORMAT_ENV, default_value = "text")]
    pub format: Format,
    /// Render ω and ∞ instead of w and infinity in text output.
    #[arg(long, global = true)]
    pub unicode: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Record,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Ordinal arithmetic in Cantor normal form.
    #[command(subcommand)]
    Ord(OrdCmd),
    /// Finite trees.
    #[command(subcommand)]
    Tree(TreeCmd),
    /// Cantor-Bendixson derivatives of ordinal intervals.
    #[command(subcommand)]
    Cb(CbCmd),
    /// Nodes of the Γ hierarchy.
    #[command(subcommand)]
    Gnode(GnodeCmd),
    /// Szlenk-index rules and pipelines.
    #[command(subcommand)]
    Szlenk(SzCmd),
}

#[derive(Subcommand, Debug)]
pub enum OrdCmd {
    Parse { a: String },
    Cmp { a: String, b: String },
    Add { a: String, b: String },
    Mul { a: String, b: String },
    Pow { a: String, b: String },
    Divmod { a: String, b: String },
    Gamma { a: String },
    Cof { a: String },
    /// The first `--n` terms of the fundamental sequence.
    Fundseq {
        a: String,
        #[arg(long, default_value_t = 5)]
        n: u64,
    },
}

#[derive(Subcommand, Debug)]
pub enum TreeCmd {
    /// Order of a tree (`B:<bound>` for the full tree with entries below bound).
    Order { tree: String },
    /// The `--n`-th derived tree.
    Derive {
        tree: String,
        #[arg(long, default_value_t = 1)]
        n: u64,
    },
    /// Constructs a monotone length-preserving map.
    Embed { s: String, t: String },
    /// Exhaustive search for such a map.
    Oracle { s: String, t: String },
}

#[derive(Subcommand, Debug)]
pub enum CbCmd {
    Deriv { xi: String, zeta: String },
    Index { xi: String },
}

#[derive(Args, Debug)]
pub struct XiArg {
    #[arg(long)]
    pub xi: String,
}

#[derive(Subcommand, Debug)]
pub enum GnodeCmd {
    /// Membership in Γ_ξ, or in Γ_{ξ,n} when `--n` is given.
    Classify {
        node: String,
        #[command(flatten)]
        xi: XiArg,
        #[arg(long)]
        n: Option<u64>,
    },
    Decompose {
        node: String,
        #[command(flatten)]
        xi: XiArg,
        #[arg(long)]
        n: u64,
    },
    Prob {
        node: String,
        #[command(flatten)]
        xi: XiArg,
    },
    Dist {
        node: String,
        #[command(flatten)]
        xi: XiArg,
    },
    Unit {
        a: String,
        b: String,
        #[command(flatten)]
        xi: XiArg,
        #[arg(long)]
        n: u64,
    },
    /// Nodes with level indices up to `--n` and at most `--budget` nodes.
    Enum {
        #[command(flatten)]
        xi: XiArg,
        #[arg(long, default_value_t = 3)]
        n: u64,
        #[arg(long, default_value_t = 10_000)]
        budget: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum SzCmd {
    Hull { a: String },
    Ck { ik: String },
    CInterval { xi: String },
    Tensor { a: String, b: String },
    Ckx { a: String, b: String },
    /// Union bound of `value` or `value@eps` entries at `--eps`.
    Union {
        #[arg(long)]
        eps: String,
        values: Vec<String>,
    },
    L35 {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
        #[arg(long, default_value = "0")]
        gamma: String,
        #[arg(long)]
        eps: String,
        #[arg(long, default_value = "0")]
        alpha: String,
        #[arg(long, default_value = "1/2")]
        theta: String,
    },
    FrakG {
        #[arg(long, default_value = "0")]
        alpha: String,
        #[arg(long, default_value = "1/2")]
        theta: String,
        /// Number of audited levels.
        #[arg(long)]
        n: Option<u64>,
    },
    FrakS {
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        beta: String,
        #[arg(long, default_value = "1/2")]
        theta: String,
        #[arg(long)]
        n: Option<u64>,
    },
    Attainable { kind: String, value: String },
}

/// A finished command: text lines and the equivalent record.
pub struct Output {
    pub text: String,
    pub record: Record,
}

impl Output {
    fn new(text: impl Into<String>, record: Record) -> Self {
        Output {
            text: text.into(),
            record,
        }
    }

    /// Value line followed by the audit trail.
    fn with_audit(value: String, record: Record, audit: &[DerivationBound]) -> Self {
        let mut text = value;
        for b in audit {
            text.push_str("\n  ");
            text.push_str(&b.to_string());
        }
        Output::new(text, record.with_audit(audit))
    }
}

fn ord(s: &str) -> Result<Ordinal> {
    Ordinal::parse(s)
}

fn ext(s: &str) -> Result<ExtOrdinal> {
    ExtOrdinal::parse(s)
}

fn rat(s: &str) -> Result<Rational> {
    parse_rational(s)
}

fn node(s: &str) -> Result<GammaNode> {
    s.parse()
}

fn tree(s: &str) -> Result<FiniteTree> {
    FiniteTree::parse(s)
}

fn single(op: &str, value: String, inputs: &[(&str, &str)]) -> Output {
    let mut r = Record::new(op, value.clone());
    for (k, v) in inputs {
        r = r.input(k, *v);
    }
    Output::new(value, r)
}

/// Executes a parsed command.
pub fn execute(cli: &Cli) -> Result<Output> {
    let style = if cli.unicode { Style::Unicode } else { Style::Ascii };
    match &cli.command {
        Command::Ord(c) => ord_cmd(c, style),
        Command::Tree(c) => tree_cmd(c),
        Command::Cb(c) => cb_cmd(c, style),
        Command::Gnode(c) => gnode_cmd(c),
        Command::Szlenk(c) => sz_cmd(c, style),
    }
}

fn ord_cmd(c: &OrdCmd, style: Style) -> Result<Output> {
    let r = |o: &Ordinal| o.render(style);
    let binary = |op: &str, a: &str, b: &str, f: fn(&Ordinal, &Ordinal) -> Result<Ordinal>| {
        let v = f(&ord(a)?, &ord(b)?)?;
        Ok::<_, Error>(single(op, r(&v), &[("a", a), ("b", b)]))
    };
    match c {
        OrdCmd::Parse { a } => Ok(single("ord parse", r(&ord(a)?), &[("a", a)])),
        OrdCmd::Cmp { a, b } => {
            let sym = match ord(a)?.cmp(&ord(b)?) {
                std::cmp::Ordering::Less => "<",
                std::cmp::Ordering::Equal => "=",
                std::cmp::Ordering::Greater => ">",
            };
            Ok(single("ord cmp", sym.into(), &[("a", a), ("b", b)]))
        }
        OrdCmd::Add { a, b } => binary("ord add", a, b, Ordinal::checked_add),
        OrdCmd::Mul { a, b } => binary("ord mul", a, b, Ordinal::checked_mul),
        OrdCmd::Pow { a, b } => binary("ord pow", a, b, Ordinal::checked_pow),
        OrdCmd::Divmod { a, b } => {
            let (q, rem) = ord(a)?.divmod(&ord(b)?)?;
            let text = format!("q = {}\nr = {}", r(&q), r(&rem));
            let value = format!("({}, {})", q, rem);
            let rec = Record::new("ord divmod", value).input("a", a.as_str()).input("b", b.as_str());
            Ok(Output::new(text, rec))
        }
        OrdCmd::Gamma { a } => {
            let v = ext(a)?.gamma()?;
            Ok(single("ord gamma", v.render(style), &[("a", a)]))
        }
        OrdCmd::Cof { a } => Ok(single("ord cof", ord(a)?.cofinality().to_string(), &[("a", a)])),
        OrdCmd::Fundseq { a, n } => {
            let x = ord(a)?;
            let terms = (1..=*n).map(|i| x.fundamental(i)).collect::<Result<Vec<_>>>()?;
            let text: Vec<String> = terms.iter().map(r).collect();
            let value: Vec<String> = terms.iter().map(Ordinal::to_string).collect();
            let rec = Record::new("ord fundseq", value.join(", "))
                .input("a", a.as_str())
                .input("n", n.to_string());
            Ok(Output::new(text.join("\n"), rec))
        }
    }
}

fn tree_cmd(c: &TreeCmd) -> Result<Output> {
    match c {
        TreeCmd::Order { tree: t } => {
            let desc = match t.trim().strip_prefix("B:") {
                Some(bound) => TreeDescriptor::BnFamily { bound: ord(bound)? },
                None => TreeDescriptor::Finite(tree(t)?),
            };
            Ok(single("tree order", tree_order(&desc)?.to_string(), &[("tree", t)]))
        }
        TreeCmd::Derive { tree: t, n } => {
            let mut cur = tree(t)?;
            for _ in 0..*n {
                cur = cur.derive();
            }
            let n_text = n.to_string();
            Ok(single("tree derive", cur.render(), &[("tree", t), ("n", &n_text)]))
        }
        TreeCmd::Embed { s, t } => {
            let (st, tt) = (tree(s)?, tree(t)?);
            let value = match monotone_embed(&st, &tt) {
                None => "none".to_owned(),
                Some(map) => map
                    .0
                    .iter()
                    .enumerate()
                    .filter_map(|(i, m)| m.map(|m| format!("{i}->{m}")))
                    .collect::<Vec<_>>()
                    .join(" "),
            };
            Ok(single("tree embed", value, &[("s", s), ("t", t)]))
        }
        TreeCmd::Oracle { s, t } => {
            let v = embed_exists_bruteforce(&tree(s)?, &tree(t)?)?;
            Ok(single("tree oracle", v.to_string(), &[("s", s), ("t", t)]))
        }
    }
}

fn cb_cmd(c: &CbCmd, style: Style) -> Result<Output> {
    match c {
        CbCmd::Deriv { xi, zeta } => {
            let stage = cb_interval_derivative(&ord(xi)?, &ord(zeta)?)?;
            Ok(single("cb deriv", stage.to_string(), &[("xi", xi), ("zeta", zeta)]))
        }
        CbCmd::Index { xi } => {
            let v = cb_interval_index(&ord(xi)?)?;
            Ok(single("cb index", v.render(style), &[("xi", xi)]))
        }
    }
}

fn gnode_cmd(c: &GnodeCmd) -> Result<Output> {
    match c {
        GnodeCmd::Classify { node: t, xi, n } => {
            let (g, x) = (node(t)?, ord(&xi.xi)?);
            let m = match n {
                Some(n) => level_classify(&g, &x, *n),
                None => gamma_node_classify(&g, &x),
            };
            let mut rec = Record::new("gnode classify", m.to_string())
                .input("node", g.render())
                .input("xi", x.to_string());
            if let Some(n) = n {
                rec = rec.input("n", n.to_string());
            }
            Ok(Output::new(m.to_string(), rec))
        }
        GnodeCmd::Decompose { node: t, xi, n } => {
            let (g, x) = (node(t)?, ord(&xi.xi)?);
            let d = decompose(&g, &x, *n)?;
            let parts: Vec<String> = d.parts.iter().map(GammaNode::render).collect();
            let text = format!(
                "m = {}\nparts = {}\niota = {}\npi = {}",
                d.m,
                parts.join(" "),
                d.iota,
                d.pi
            );
            let value = format!("m={}; parts={}; iota={}; pi={}", d.m, parts.join(" "), d.iota, d.pi);
            let rec = Record::new("gnode decompose", value)
                .input("node", g.render())
                .input("xi", x.to_string())
                .input("n", n.to_string());
            Ok(Output::new(text, rec))
        }
        GnodeCmd::Prob { node: t, xi } => {
            let (g, x) = (node(t)?, ord(&xi.xi)?);
            let p = render_rational(&prob(&g, &x)?);
            Ok(single("gnode prob", p, &[("node", &g.render()), ("xi", &x.to_string())]))
        }
        GnodeCmd::Dist { node: t, xi } => {
            let (g, x) = (node(t)?, ord(&xi.xi)?);
            let dist = branch_distribution(&g, &x)?;
            let lines: Vec<String> = dist
                .iter()
                .map(|(p, w)| format!("{} {}", p, render_rational(w)))
                .collect();
            let rec = Record::new("gnode dist", lines.join("; "))
                .input("node", g.render())
                .input("xi", x.to_string());
            Ok(Output::new(lines.join("\n"), rec))
        }
        GnodeCmd::Unit { a, b, xi, n } => {
            let (ga, gb, x) = (node(a)?, node(b)?, ord(&xi.xi)?);
            let v = same_unit(&ga, &gb, &x, *n)?.to_string();
            let n_text = n.to_string();
            Ok(single(
                "gnode unit",
                v,
                &[("a", &ga.render()), ("b", &gb.render()), ("xi", &x.to_string()), ("n", &n_text)],
            ))
        }
        GnodeCmd::Enum { xi, n, budget } => {
            let x = ord(&xi.xi)?;
            let b = Budget {
                max_n: *n,
                limit_branches: *n,
                max_nodes: *budget,
            };
            let nodes = enumerate_truncated(&x, &b)?;
            let lines: Vec<String> = nodes
                .iter()
                .map(|e| {
                    let mut line = e.node.render();
                    if e.maximal {
                        line.push_str(" max");
                    }
                    if let Some(z) = &e.branch {
                        line.push_str(&format!(" branch={z}"));
                    }
                    line
                })
                .collect();
            let rec = Record::new("gnode enum", lines.join("; "))
                .input("xi", x.to_string())
                .input("n", n.to_string())
                .input("budget", budget.to_string());
            Ok(Output::new(lines.join("\n"), rec))
        }
    }
}

/// Parses `value` or `value@eps` for the union command.
fn union_entry(text: &str, default_eps: &Rational) -> Result<DerivationBound> {
    let (v, eps) = match text.split_once('@') {
        Some((v, e)) => (v, rat(e)?),
        None => (text, default_eps.clone()),
    };
    Ok(DerivationBound {
        subject: text.to_owned(),
        epsilon: eps,
        kind: BoundKind::UpperBound,
        value: ext(v)?,
        citation: "input",
    })
}

fn norming(alpha: &str, theta: &str, levels: Option<u64>) -> Result<NormingParams> {
    let mut p = NormingParams::new(ord(alpha)?, rat(theta)?);
    if let Some(l) = levels {
        p.audit_levels = l;
    }
    Ok(p)
}

fn sz_cmd(c: &SzCmd, style: Style) -> Result<Output> {
    let r = |v: &ExtOrdinal| v.render(style);
    match c {
        SzCmd::Hull { a } => Ok(single("szlenk hull", r(&sz_convex_hull(&ext(a)?)?), &[("a", a)])),
        SzCmd::Ck { ik } => Ok(single("szlenk ck", r(&sz_ck(&ext(ik)?)?), &[("ik", ik)])),
        SzCmd::CInterval { xi } => Ok(single(
            "szlenk c-interval",
            r(&sz_c_interval(&ord(xi)?)?),
            &[("xi", xi)],
        )),
        SzCmd::Tensor { a, b } => Ok(single(
            "szlenk tensor",
            r(&sz_max_rule(MaxContext::Tensor, &ext(a)?, &ext(b)?)),
            &[("a", a), ("b", b)],
        )),
        SzCmd::Ckx { a, b } => Ok(single(
            "szlenk ckx",
            r(&sz_max_rule(MaxContext::CkX, &ext(a)?, &ext(b)?)),
            &[("a", a), ("b", b)],
        )),
        SzCmd::Union { eps, values } => {
            let e = rat(eps)?;
            let entries = values
                .iter()
                .map(|v| union_entry(v, &e))
                .collect::<Result<Vec<_>>>()?;
            let b = sz_union_bound(&e, &entries, "union")?;
            let rec = Record::new("szlenk union", b.value.to_string())
                .input("eps", render_rational(&e))
                .input("values", values.join(", "));
            Ok(Output::with_audit(r(&b.value), rec, &[b]))
        }
        SzCmd::L35 {
            n,
            k,
            gamma,
            eps,
            alpha,
            theta,
        } => {
            let p = norming(alpha, theta, None)?;
            let b = family_bound(*n, *k, &ord(gamma)?, &rat(eps)?, &p)?;
            let rec = Record::new("szlenk l35", b.value.to_string())
                .input("n", n.to_string())
                .input("k", k.to_string())
                .input("gamma", gamma.as_str())
                .input("eps", eps.as_str())
                .input("alpha", alpha.as_str())
                .input("theta", theta.as_str());
            let text = format!("{} {}", b.kind, r(&b.value));
            Ok(Output::new(text, rec.with_audit(std::slice::from_ref(&b))))
        }
        SzCmd::FrakG { alpha, theta, n } => {
            let p = norming(alpha, theta, *n)?;
            let (v, audit) = sz_frak_g(&p)?;
            let rec = Record::new("szlenk frak-g", v.to_string())
                .input("alpha", p.alpha.to_string())
                .input("theta", render_rational(&p.theta));
            Ok(Output::with_audit(r(&v), rec, &audit))
        }
        SzCmd::FrakS {
            alpha,
            beta,
            theta,
            n,
        } => {
            let p = norming(alpha, theta, *n)?.with_beta(ord(beta)?);
            let (v, audit) = sz_frak_s(&p)?;
            let rec = Record::new("szlenk frak-s", v.to_string())
                .input("alpha", p.alpha.to_string())
                .input("beta", beta.as_str())
                .input("theta", render_rational(&p.theta));
            Ok(Output::with_audit(r(&v), rec, &audit))
        }
        SzCmd::Attainable { kind, value } => {
            let k: IndexKind = kind.parse()?;
            let v = attainable(k, &ext(value)?).to_string();
            Ok(single("szlenk attainable", v, &[("kind", kind), ("value", value)]))
        }
    }
}

/// Parses arguments and runs the command. Returns the exit code with the
/// standard output and error text.
pub fn run<I, T>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            return if code == 0 {
                (0, rendered, String::new())
            } else {
                (code, String::new(), rendered)
            };
        }
    };
    match execute(&cli) {
        Ok(out) => {
            let mut text = match cli.format {
                Format::Text => out.text,
                Format::Record => out.record.to_json(),
            };
            text.push('\n');
            (0, text, String::new())
        }
        Err(e) => (e.exit_code(), String::new(), format!("error: {e}\n")),
    }
}
