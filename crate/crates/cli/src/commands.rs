use std::fs;
use std::path::Path;
use std::process::ExitCode;

use pathramsey::bounds::{composed_lower_bounds, ComposeInputs, LinkFamily};
use pathramsey::certificate::{verify_certificate, Certificate, Claim, Verification};
use pathramsey::construct::{construction, construction_names, fixture, fixture_names, ConstructParams, DesignInput};
use pathramsey::hypercore::{Hypergraph, Target};
use pathramsey::monosearch::{arrows, ramsey_number_exact, size_ramsey_exact, ArrowOutcome, ExactOutcome};

use crate::config::RunConfig;
use crate::store::{RunRecord, Store};

/// Process exit status: 0 success, 1 verification failure, 2 input error,
/// 3 resource-limited unknown.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Failed,
    Input,
    Unknown,
}

impl From<Status> for ExitCode {
    fn from(s: Status) -> Self {
        ExitCode::from(match s {
            Status::Ok => 0,
            Status::Failed => 1,
            Status::Input => 2,
            Status::Unknown => 3,
        })
    }
}

/// An error reported on stderr with its exit status.
#[derive(Debug)]
pub struct Failure {
    pub status: Status,
    pub message: String,
}

impl Failure {
    pub fn input(message: impl ToString) -> Self {
        Self {
            status: Status::Input,
            message: message.to_string(),
        }
    }

    fn io(path: &Path, e: std::io::Error) -> Self {
        Self::input(format!("{}: {e}", path.display()))
    }
}

pub type CmdResult = Result<Status, Failure>;

/// What a command did, for the manifest.
pub struct Run<'a> {
    pub argv: &'a [String],
    pub config: &'a RunConfig,
    store: Option<Store>,
}

impl<'a> Run<'a> {
    pub fn new(argv: &'a [String], config: &'a RunConfig) -> Self {
        Self { argv, config, store: None }
    }

    fn store(&mut self) -> Result<&Store, Failure> {
        if self.store.is_none() {
            let s = Store::open(&self.config.out_dir).map_err(|e| Failure::io(&self.config.out_dir, e))?;
            self.store = Some(s);
        }
        Ok(self.store.as_ref().expect("just opened"))
    }

    fn save(&mut self, cert: &Certificate) -> Result<String, Failure> {
        let store = self.store()?;
        let name = store.put(cert).map_err(|e| Failure::io(store.dir(), e))?;
        println!("certificate: {}", store.dir().join(&name).display());
        Ok(name)
    }

    fn attach(&mut self, cert: &Certificate, kind: &str, value: &serde_json::Value) -> Result<String, Failure> {
        let store = self.store()?;
        store.put_attachment(cert, kind, value).map_err(|e| Failure::io(store.dir(), e))
    }

    fn record(&mut self, outcome: impl Into<String>, files: Vec<String>) -> Result<(), Failure> {
        let run = RunRecord {
            command: self.argv.to_vec(),
            config: self.config.clone(),
            outcome: outcome.into(),
            files,
        };
        let store = self.store()?;
        store.record(run).map_err(|e| Failure::io(store.dir(), e))
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::io(path, e))?;
    serde_json::from_str(&text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

pub fn read_host(path: &Path) -> Result<Hypergraph, Failure> {
    read_json(path)
}

pub fn parse_target(s: &str) -> Result<Target, Failure> {
    s.parse().map_err(Failure::input)
}

/// Verifies, marks and stores a certificate. A failed check prints the
/// reason and yields `Failed`; an exhausted budget yields `Unknown`.
fn certify(run: &mut Run, cert: Certificate) -> Result<(Status, Option<(Certificate, String)>), Failure> {
    let (cert, v) = cert.verify_and_mark(run.config.limits()).map_err(Failure::input)?;
    match v {
        Verification::Valid => {
            let name = run.save(&cert)?;
            Ok((Status::Ok, Some((cert, name))))
        }
        Verification::Invalid { reason, witness } => {
            eprintln!("verification failed: {reason}");
            if let Some(w) = witness {
                eprintln!("witness: {}", serde_json::to_string(&w).expect("witness serializes"));
            }
            Ok((Status::Failed, None))
        }
        Verification::Unknown => {
            eprintln!("verification ran out of budget");
            Ok((Status::Unknown, None))
        }
    }
}

pub struct BoundsArgs {
    pub r: usize,
    pub k: usize,
    pub ell: usize,
    pub n: Option<usize>,
    pub d_hat: Option<u64>,
    pub family: Option<String>,
    pub json: bool,
}

pub fn cmd_bounds(a: &BoundsArgs) -> CmdResult {
    if a.k == 0 || a.ell >= a.k {
        return Err(Failure::input(format!("need 0 <= l < k, got k={}, l={}", a.k, a.ell)));
    }
    let n = a.n.ok_or_else(|| Failure::input("missing --n"))?;
    let family = a.family.as_deref().map(parse_family).transpose()?;
    let inputs = ComposeInputs {
        link_size_ramsey: a.d_hat.map(Into::into),
        family,
    };
    let report = composed_lower_bounds(a.r, a.k, a.ell, n, &inputs).map_err(Failure::input)?;
    if a.json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.to_table());
    }
    Ok(Status::Ok)
}

/// `label,link,family`: a family sharing the link graph with size-Ramsey
/// lower bound `link` and Ramsey lower bound `family`.
fn parse_family(s: &str) -> Result<LinkFamily, Failure> {
    let parts: Vec<&str> = s.split(',').collect();
    let bad = || Failure::input(format!("--family expects label,link,family, got {s:?}"));
    let [label, link, fam] = parts.as_slice() else {
        return Err(bad());
    };
    Ok(LinkFamily {
        label: label.to_string(),
        link_size_ramsey: link.trim().parse().map_err(|_| bad())?,
        family_ramsey: fam.trim().parse().map_err(|_| bad())?,
    })
}

pub struct ColorArgs {
    pub construction: String,
    pub input: Option<std::path::PathBuf>,
    pub fixture: Option<String>,
    pub design: Option<std::path::PathBuf>,
    pub r: usize,
    pub k: Option<usize>,
    pub ell: Option<usize>,
    pub n: Option<usize>,
    pub m: Option<usize>,
    pub n_prime: Option<usize>,
    pub d_hat: Option<usize>,
    pub base_oracle: String,
    pub link_oracle: String,
}

pub fn cmd_color(run: &mut Run, a: &ColorArgs) -> CmdResult {
    let c = construction(&a.construction)
        .map_err(|e| Failure::input(format!("{e}; known: {}", construction_names().join(", "))))?;
    let host = a.input.as_deref().map(read_host).transpose()?;
    let design: Option<DesignInput> = match (&a.fixture, &a.design) {
        (Some(_), Some(_)) => return Err(Failure::input("give --fixture or --design, not both")),
        (Some(name), None) => Some(
            fixture(name).ok_or_else(|| Failure::input(format!("unknown fixture {name:?}; known: {}", fixture_names().join(", "))))?,
        ),
        (None, Some(path)) => Some(read_json(path)?),
        (None, None) => None,
    };
    let params = ConstructParams {
        host,
        r: a.r,
        k: a.k,
        ell: a.ell,
        n: a.n,
        m: a.m,
        n_prime: a.n_prime,
        d_hat: a.d_hat,
        design,
        base_oracle: a.base_oracle.clone(),
        link_oracle: a.link_oracle.clone(),
        seed: run.config.seed,
        limits: run.config.limits(),
    };
    let out = c.build(&params).map_err(Failure::input)?;
    println!("construction: {}", out.construction);
    println!("host: {} vertices, {} edges", out.host.vertex_count(), out.host.edge_count());
    println!("colors: {}", out.colors_used);
    println!("guarantee: {}", out.guarantee);
    let r = a.r.max(out.colors_used).max(1);
    let cert = Certificate::new(Claim::Avoids, out.target, r, out.host, Some(out.coloring), None)
        .with_note(format!("{} construction: {}", out.construction, out.guarantee));
    let (status, saved) = certify(run, cert)?;
    let mut files = Vec::new();
    if let Some((cert, name)) = saved {
        files.push(name);
        files.push(run.attach(&cert, "trace", &out.trace)?);
    }
    run.record(outcome_word(status, "avoids"), files)?;
    Ok(status)
}

fn outcome_word(status: Status, ok: &str) -> String {
    match status {
        Status::Ok => ok.to_string(),
        Status::Failed => "verification failed".into(),
        Status::Input => "input error".into(),
        Status::Unknown => "unknown".into(),
    }
}

pub fn cmd_arrow(run: &mut Run, host: &Path, r: usize, target: &str) -> CmdResult {
    let host = read_host(host)?;
    let target = parse_target(target)?;
    let d = arrows(&host, r, &target, run.config.limits()).map_err(Failure::input)?;
    println!("nodes: {}", d.stats.nodes);
    let (word, cert) = match d.outcome {
        ArrowOutcome::Arrows => ("arrows", Certificate::new(Claim::Arrows, target, r, host, None, None)),
        ArrowOutcome::Avoided(c) => ("avoided", Certificate::new(Claim::Avoids, target, r, host, Some(c), None)),
        ArrowOutcome::Unknown => {
            println!("decision: unknown");
            run.record("unknown", Vec::new())?;
            return Ok(Status::Unknown);
        }
    };
    println!("decision: {word}");
    let (status, saved) = certify(run, cert)?;
    run.record(outcome_word(status, word), saved.into_iter().map(|(_, n)| n).collect())?;
    Ok(status)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum ExactKind {
    Ramsey,
    SizeRamsey,
}

pub fn cmd_exact(run: &mut Run, kind: ExactKind, target: &str, r: usize, max: usize) -> CmdResult {
    let target = parse_target(target)?;
    let limits = run.config.limits();
    let mut certs = Vec::new();
    let outcome = match kind {
        ExactKind::Ramsey => {
            let res = ramsey_number_exact(&target, r, max, limits).map_err(Failure::input)?;
            println!("nodes: {}", res.stats.nodes);
            if let Some((h, c)) = res.below {
                certs.push(Certificate::new(Claim::Avoids, target, r, h, Some(c), None).with_note("avoiding coloring below the exact value"));
            }
            if let (ExactOutcome::Exact(n), Some(h)) = (&res.outcome, res.host) {
                certs.push(Certificate::new(Claim::RamseyExact, target, r, h, None, Some(*n)));
            }
            res.outcome
        }
        ExactKind::SizeRamsey => {
            let res = size_ramsey_exact(&target, r, max, limits).map_err(Failure::input)?;
            println!("nodes: {}", res.stats.nodes);
            for l in &res.levels {
                println!(
                    "edges {}: {} hosts, {} contain the target, {} arrow, {} unknown",
                    l.edges, l.hosts, l.containing_target, l.arrowing, l.unknown
                );
            }
            if let (ExactOutcome::Exact(m), Some(h)) = (&res.outcome, res.host) {
                certs.push(Certificate::new(Claim::SizeRamseyExact, target, r, h, None, Some(*m)));
            }
            res.outcome
        }
    };
    let (mut status, word) = match outcome {
        ExactOutcome::Exact(v) => {
            println!("value: {v}");
            (Status::Ok, format!("exact {v}"))
        }
        ExactOutcome::LowerBound(v) => {
            println!("value: at least {v} (nothing within the range arrows)");
            (Status::Ok, format!("at least {v}"))
        }
        ExactOutcome::Unknown { lower_bound } => {
            println!("value: unknown, at least {lower_bound} (node budget exhausted)");
            (Status::Unknown, format!("unknown, at least {lower_bound}"))
        }
    };
    let mut files = Vec::new();
    for cert in certs {
        let (s, saved) = certify(run, cert)?;
        if s != Status::Ok && status == Status::Ok {
            status = s;
        }
        files.extend(saved.map(|(_, n)| n));
    }
    run.record(if status == Status::Failed { "verification failed".into() } else { word }, files)?;
    Ok(status)
}

pub fn cmd_verify(config: &RunConfig, path: &Path) -> CmdResult {
    let text = fs::read_to_string(path).map_err(|e| Failure::io(path, e))?;
    let cert = Certificate::from_json(&text).map_err(Failure::input)?;
    let v = verify_certificate(&cert, config.limits()).map_err(Failure::input)?;
    Ok(match v {
        Verification::Valid => {
            println!("valid: {:?} {} with r = {}", cert.claim, cert.target, cert.r);
            Status::Ok
        }
        Verification::Invalid { reason, witness } => {
            println!("invalid: {reason}");
            if let Some(w) = witness {
                println!("witness: {}", serde_json::to_string(&w).expect("witness serializes"));
            }
            Status::Failed
        }
        Verification::Unknown => {
            println!("unknown: node budget exhausted");
            Status::Unknown
        }
    })
}

pub fn cmd_fixtures() -> CmdResult {
    for name in fixture_names() {
        let d = fixture(name).expect("listed fixture exists");
        println!(
            "{name}: {} points, {} blocks of size {}{}",
            d.n,
            d.cliques.len(),
            d.clique_order,
            if d.resolution.is_some() { ", resolvable" } else { "" }
        );
    }
    Ok(Status::Ok)
}
