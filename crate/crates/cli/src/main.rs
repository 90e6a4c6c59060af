//! Command-line front end: build and inspect lattices, compute congruence
//! and ideal structure, run constructions, check identities, and execute
//! the full verification suite.
//!
//! Exit codes: 0 on success, 1 on a domain error (bad input data, failed
//! verification), 2 on a usage error.

mod input;

use clap::{Args, Parser, Subcommand};
use input::{resolve_lattice, CliResult, DomainError};
use latkit::autgroup::{automorphisms, PermGroup};
use latkit::congruence::{
    all_congruences_capped, cfi_profile, princ_poset, Congruence, DEFAULT_MAX_CONGRUENCES,
};
use latkit::construct::{
    freese_composite, glued_sum, m3_cap, product_of_chains, replace_atom_intervals, tower,
    w_gadget,
};
use latkit::corpus::DEFAULT_SEED;
use latkit::identity::{holds_in, Identity};
use latkit::io::{to_dot, to_json};
use latkit::lattice::{ElemId, FiniteLattice, DEFAULT_MAX_ELEMENTS};
use serde_json::json;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "latkit",
    about = "Finite lattice computations: congruences, ideals, identities, constructions",
    version
)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

/// Arguments shared by every verb that consumes one lattice.
#[derive(Args)]
struct LatticeArg {
    /// Lattice source: a JSON file, `-` for stdin, or a stock name
    /// (m3, n5, hexagon, doubled-m3, chain:<n>, boolean:<m>, sub:<p>,<n>).
    /// Omitting it reads stdin, so commands can be piped.
    #[arg(long)]
    lattice: Option<String>,
    /// Cap on the number of elements accepted when building.
    #[arg(long)]
    limit: Option<usize>,
}

impl LatticeArg {
    fn resolve(&self) -> CliResult<FiniteLattice> {
        resolve_lattice(self.lattice.as_deref(), self.limit)
    }
}

#[derive(Subcommand)]
enum Verb {
    /// Build a lattice from its source and report a validation summary.
    Build {
        #[command(flatten)]
        lattice: LatticeArg,
        /// Subspace lattice over GF(p): field order (needs --n).
        #[arg(long)]
        p: Option<u64>,
        /// Subspace lattice over GF(p): ambient dimension (needs --p).
        #[arg(long)]
        n: Option<usize>,
        /// Emit the canonical JSON document instead of the summary.
        #[arg(long)]
        json: bool,
    },
    /// Show the elements, covers, and structural properties of a lattice.
    Show {
        #[command(flatten)]
        lattice: LatticeArg,
        #[arg(long)]
        json: bool,
    },
    /// List the congruence lattice.
    Con {
        #[command(flatten)]
        lattice: LatticeArg,
        #[arg(long)]
        json: bool,
    },
    /// List the principal congruences and their refinement order.
    Princ {
        #[command(flatten)]
        lattice: LatticeArg,
        #[arg(long)]
        json: bool,
    },
    /// Print the ⟨congruence, filter, ideal⟩ count profile.
    Cfi {
        #[command(flatten)]
        lattice: LatticeArg,
        #[arg(long)]
        json: bool,
    },
    /// Print the automorphism group order and generators.
    Aut {
        #[command(flatten)]
        lattice: LatticeArg,
        #[arg(long)]
        json: bool,
    },
    /// List all ideals (each is principal).
    Ideals {
        #[command(flatten)]
        lattice: LatticeArg,
        #[arg(long)]
        json: bool,
    },
    /// List all filters (each is principal).
    Filters {
        #[command(flatten)]
        lattice: LatticeArg,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate a lattice identity over all variable assignments.
    #[command(name = "check-identity")]
    CheckIdentity {
        #[command(flatten)]
        lattice: LatticeArg,
        /// `modular`, `distributive`, or a prefix equation such as
        /// "(= (meet x (join y z)) (join (meet x y) (meet x z)))".
        identity: String,
        #[arg(long)]
        json: bool,
    },
    /// Run a lattice construction and print the result as JSON.
    Construct {
        #[command(subcommand)]
        kind: ConstructKind,
    },
    /// Run the full verification suite and print a PASS/FAIL table.
    #[command(name = "paper-check")]
    PaperCheck {
        /// Seed for the randomized corpus (defaults to the standard seed).
        #[arg(long)]
        rand_seed: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Write a lattice as canonical JSON (stdout) and/or a DOT file.
    Export {
        #[command(flatten)]
        lattice: LatticeArg,
        /// Print the canonical JSON document to stdout.
        #[arg(long)]
        json: bool,
        /// Write a Hasse-diagram DOT file to this path.
        #[arg(long, value_name = "FILE")]
        dot: Option<String>,
    },
}

#[derive(Subcommand)]
enum ConstructKind {
    /// Wrap a seed lattice in new bounds plus two incomparable atom-coatoms.
    #[command(name = "w-gadget")]
    WGadget {
        /// Seed lattice (same forms as --lattice).
        #[arg(long = "seed-lattice", alias = "seed")]
        seed_lattice: Option<String>,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Iterate the gadget construction a number of stages over a seed.
    Tower {
        #[arg(long = "seed-lattice", alias = "seed")]
        seed_lattice: Option<String>,
        /// Number of gadget stages.
        #[arg(long)]
        stages: usize,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Identify the top of the first lattice with the bottom of the second.
    #[command(name = "glued-sum")]
    GluedSum {
        /// Lower part (same forms as --lattice).
        first: String,
        /// Upper part.
        second: String,
    },
    /// Cap a simple base and a copy of the second lattice with fresh bounds.
    #[command(name = "m3-cap")]
    M3Cap {
        /// The simple base lattice.
        base: String,
        /// The lattice whose congruence structure is transported.
        transported: String,
    },
    /// Glued composite with congruence count 2^m * 3^n.
    #[command(name = "freese-composite")]
    FreeseComposite {
        /// Field order for the subspace-lattice summands.
        #[arg(long, default_value_t = 2)]
        p: u64,
        /// Ambient dimension for the subspace-lattice summands.
        #[arg(long, default_value_t = 2)]
        dim: usize,
        /// Exponent of 2 in the congruence count.
        #[arg(long)]
        m: usize,
        /// Exponent of 3 in the congruence count.
        #[arg(long)]
        n: usize,
    },
    /// Direct product of n chains of height m.
    #[command(name = "product-chains")]
    ProductChains {
        /// Number of coordinates.
        #[arg(long)]
        n: usize,
        /// Height of each chain (number of covers).
        #[arg(long)]
        m: u32,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Replace the intervals below the base's atoms by the given lattices,
    /// one per atom in atom order.
    #[command(name = "replace-atoms")]
    ReplaceAtoms {
        /// The base lattice.
        base: String,
        /// Replacement lattices, one per atom of the base.
        replacements: Vec<String>,
    },
}

fn blocks_as_labels(c: &Congruence, l: &FiniteLattice) -> Vec<Vec<String>> {
    c.blocks()
        .iter()
        .map(|b| b.iter().map(|&x| l.label(x).to_string()).collect())
        .collect()
}

fn congruences_of(l: &FiniteLattice) -> CliResult<Vec<Congruence>> {
    Ok(all_congruences_capped(l, DEFAULT_MAX_CONGRUENCES)?)
}

fn cmd_build(
    lattice: LatticeArg,
    p: Option<u64>,
    n: Option<usize>,
    json: bool,
) -> CliResult<()> {
    let l = match (p, n) {
        (Some(p), Some(n)) => {
            let max = lattice.limit.unwrap_or(DEFAULT_MAX_ELEMENTS);
            latkit::gf::subspace_lattice_with_limit(p, n, max)?.lattice
        }
        (None, None) => lattice.resolve()?,
        _ => return Err(DomainError("--p and --n must be given together".into())),
    };
    if json {
        println!("{}", to_json(&l));
    } else {
        println!(
            "valid lattice: {} elements, {} cover pairs, length {}, bottom {}, top {}",
            l.size(),
            l.covers().len(),
            l.length(),
            l.label(l.bottom()),
            l.label(l.top()),
        );
    }
    Ok(())
}

fn cmd_show(l: &FiniteLattice, json: bool) -> CliResult<()> {
    if json {
        println!("{}", to_json(l));
        return Ok(());
    }
    println!("elements ({}): {}", l.size(), l.labels().join(" "));
    let covers: Vec<String> = l
        .covers()
        .iter()
        .map(|&(a, b)| format!("{} < {}", l.label(a), l.label(b)))
        .collect();
    println!("covers ({}): {}", covers.len(), covers.join(", "));
    println!(
        "bottom {}, top {}, length {}",
        l.label(l.bottom()),
        l.label(l.top()),
        l.length()
    );
    let atoms: Vec<&str> = l.atoms().iter().map(|&x| l.label(x)).collect();
    println!("atoms: {}", atoms.join(" "));
    println!(
        "modular: {}, distributive: {}, simple: {}, rigid: {}",
        latkit::identity::is_modular(l),
        latkit::identity::is_distributive(l),
        latkit::congruence::is_simple(l),
        latkit::autgroup::is_rigid(l),
    );
    Ok(())
}

fn cmd_con(l: &FiniteLattice, json: bool) -> CliResult<()> {
    let cons = congruences_of(l)?;
    if json {
        let doc = json!({
            "count": cons.len(),
            "congruences": cons.iter().map(|c| blocks_as_labels(c, l)).collect::<Vec<_>>(),
        });
        println!("{}", serde_json::to_string_pretty(&doc).expect("report serializes"));
        return Ok(());
    }
    println!("{} congruences", cons.len());
    for c in &cons {
        println!("  {}", c.display(l));
    }
    Ok(())
}

fn cmd_princ(l: &FiniteLattice, json: bool) -> CliResult<()> {
    let pp = princ_poset(l);
    let covers = pp.poset.cover_pairs();
    if json {
        let doc = json!({
            "count": pp.size(),
            "members": pp.members.iter().map(|c| blocks_as_labels(c, l)).collect::<Vec<_>>(),
            "covers": covers,
        });
        println!("{}", serde_json::to_string_pretty(&doc).expect("report serializes"));
        return Ok(());
    }
    println!("{} principal congruences", pp.size());
    for (i, c) in pp.members.iter().enumerate() {
        println!("  [{i}] {}", c.display(l));
    }
    let rendered: Vec<String> =
        covers.iter().map(|&(a, b)| format!("[{a}] < [{b}]")).collect();
    println!("order: {}", if rendered.is_empty() { "antichain".into() } else { rendered.join(", ") });
    Ok(())
}

fn cmd_cfi(l: &FiniteLattice, json: bool) -> CliResult<()> {
    let profile = cfi_profile(l)?;
    if json {
        let doc = json!({
            "congruences": profile.con_count,
            "filters": profile.filt_count,
            "ideals": profile.id_count,
        });
        println!("{}", serde_json::to_string_pretty(&doc).expect("report serializes"));
    } else {
        println!("{profile}");
    }
    Ok(())
}

fn cmd_aut(l: &FiniteLattice, json: bool) -> CliResult<()> {
    let group = automorphisms(l);
    let labels = l.labels().to_vec();
    let gens: Vec<String> = group
        .generators()
        .iter()
        .map(|g| PermGroup::cycle_string(g, Some(&labels)))
        .collect();
    if json {
        let doc = json!({ "order": group.order(), "generators": gens });
        println!("{}", serde_json::to_string_pretty(&doc).expect("report serializes"));
        return Ok(());
    }
    println!("order {}", group.order());
    if gens.is_empty() {
        println!("generators: none (rigid)");
    } else {
        println!("generators: {}", gens.join(" "));
    }
    Ok(())
}

fn cmd_ideals(l: &FiniteLattice, json: bool, filters: bool) -> CliResult<()> {
    let items = if filters { latkit::ideal::filters(l) } else { latkit::ideal::ideals(l) };
    let noun = if filters { "filters" } else { "ideals" };
    if json {
        let doc = json!({
            "count": items.len(),
            noun: items
                .iter()
                .map(|i| {
                    json!({
                        "generator": l.label(i.generator),
                        "members": i.member_labels(l),
                    })
                })
                .collect::<Vec<_>>(),
        });
        println!("{}", serde_json::to_string_pretty(&doc).expect("report serializes"));
        return Ok(());
    }
    println!("{} {noun}", items.len());
    for item in &items {
        println!("  <{}> = {{{}}}", l.label(item.generator), item.member_labels(l).join(", "));
    }
    Ok(())
}

fn parse_identity(token: &str) -> CliResult<Identity> {
    match token {
        "modular" => Ok(Identity::modular_law()),
        "distributive" => Ok(Identity::distributive_law()),
        src => Ok(Identity::parse(src)?),
    }
}

fn cmd_check_identity(l: &FiniteLattice, token: &str, json: bool) -> CliResult<()> {
    let identity = parse_identity(token)?;
    let outcome = holds_in(l, &identity)?;
    let witness: Option<Vec<(String, String)>> = outcome.counterexample().map(|assignment| {
        identity
            .var_names
            .iter()
            .zip(assignment)
            .map(|(v, &x)| (v.clone(), l.label(x).to_string()))
            .collect()
    });
    if json {
        let doc = json!({
            "identity": identity.to_string(),
            "holds": outcome.holds(),
            "counterexample": witness.as_ref().map(|w| {
                w.iter().map(|(v, x)| json!({ "variable": v, "value": x })).collect::<Vec<_>>()
            }),
        });
        println!("{}", serde_json::to_string_pretty(&doc).expect("report serializes"));
        return Ok(());
    }
    if let Some(w) = witness {
        let parts: Vec<String> = w.iter().map(|(v, x)| format!("{v} = {x}")).collect();
        println!("fails at {}", parts.join(", "));
    } else {
        println!("holds");
    }
    Ok(())
}

fn cmd_construct(kind: ConstructKind) -> CliResult<()> {
    let l = match kind {
        ConstructKind::WGadget { seed_lattice, limit } => {
            w_gadget(&resolve_lattice(seed_lattice.as_deref(), limit)?)
        }
        ConstructKind::Tower { seed_lattice, stages, limit } => {
            let seed = resolve_lattice(seed_lattice.as_deref(), limit)?;
            tower(&seed, stages, limit.unwrap_or(DEFAULT_MAX_ELEMENTS))?.lattice
        }
        ConstructKind::GluedSum { first, second } => {
            let a = resolve_lattice(Some(&first), None)?;
            let b = resolve_lattice(Some(&second), None)?;
            glued_sum(&a, &b)
        }
        ConstructKind::M3Cap { base, transported } => {
            let lp = resolve_lattice(Some(&base), None)?;
            let h = resolve_lattice(Some(&transported), None)?;
            m3_cap(&lp, &h)?
        }
        ConstructKind::FreeseComposite { p, dim, m, n } => freese_composite(p, dim, m, n)?,
        ConstructKind::ProductChains { n, m, limit } => {
            product_of_chains(n, m, limit.unwrap_or(DEFAULT_MAX_ELEMENTS))?.lattice
        }
        ConstructKind::ReplaceAtoms { base, replacements } => {
            let l = resolve_lattice(Some(&base), None)?;
            let atoms: Vec<ElemId> = l.atoms().to_vec();
            if replacements.len() != atoms.len() {
                return Err(DomainError(format!(
                    "base has {} atoms but {} replacements were given",
                    atoms.len(),
                    replacements.len()
                )));
            }
            let built: Vec<FiniteLattice> = replacements
                .iter()
                .map(|t| resolve_lattice(Some(t), None))
                .collect::<CliResult<_>>()?;
            let assignment: Vec<(ElemId, &FiniteLattice)> =
                atoms.into_iter().zip(built.iter()).collect();
            replace_atom_intervals(&l, &assignment)?
        }
    };
    println!("{}", to_json(&l));
    Ok(())
}

fn cmd_paper_check(rand_seed: Option<u64>, json: bool) -> CliResult<bool> {
    let seed = rand_seed.unwrap_or(DEFAULT_SEED);
    let outcomes = latkit::verify::run_all(seed);
    if json {
        let doc: Vec<_> = outcomes
            .iter()
            .map(|o| {
                json!({
                    "id": o.id,
                    "name": o.name,
                    "passed": o.passed,
                    "elapsed_ms": o.elapsed.as_millis() as u64,
                    "budget_ms": o.budget.as_millis() as u64,
                    "details": o.details,
                })
            })
            .collect();
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({ "seed": seed, "checks": doc }))
                .expect("report serializes")
        );
    } else {
        print!("{}", latkit::verify::render_report(&outcomes));
    }
    Ok(outcomes.iter().all(|o| o.passed))
}

fn cmd_export(l: &FiniteLattice, json: bool, dot: Option<String>) -> CliResult<Option<i32>> {
    if !json && dot.is_none() {
        eprintln!("error: export needs --json and/or --dot <file>");
        return Ok(Some(2));
    }
    if json {
        println!("{}", to_json(l));
    }
    if let Some(path) = dot {
        std::fs::write(&path, to_dot(l))
            .map_err(|e| DomainError(format!("writing {path}: {e}")))?;
    }
    Ok(None)
}

fn dispatch(cli: Cli) -> CliResult<i32> {
    match cli.verb {
        Verb::Build { lattice, p, n, json } => cmd_build(lattice, p, n, json).map(|()| 0),
        Verb::Show { lattice, json } => cmd_show(&lattice.resolve()?, json).map(|()| 0),
        Verb::Con { lattice, json } => cmd_con(&lattice.resolve()?, json).map(|()| 0),
        Verb::Princ { lattice, json } => cmd_princ(&lattice.resolve()?, json).map(|()| 0),
        Verb::Cfi { lattice, json } => cmd_cfi(&lattice.resolve()?, json).map(|()| 0),
        Verb::Aut { lattice, json } => cmd_aut(&lattice.resolve()?, json).map(|()| 0),
        Verb::Ideals { lattice, json } => cmd_ideals(&lattice.resolve()?, json, false).map(|()| 0),
        Verb::Filters { lattice, json } => cmd_ideals(&lattice.resolve()?, json, true).map(|()| 0),
        Verb::CheckIdentity { lattice, identity, json } => {
            cmd_check_identity(&lattice.resolve()?, &identity, json).map(|()| 0)
        }
        Verb::Construct { kind } => cmd_construct(kind).map(|()| 0),
        Verb::PaperCheck { rand_seed, json } => {
            cmd_paper_check(rand_seed, json).map(|all_passed| if all_passed { 0 } else { 1 })
        }
        Verb::Export { lattice, json, dot } => {
            cmd_export(&lattice.resolve()?, json, dot).map(|code| code.unwrap_or(0))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(), // clap uses exit code 2 for usage errors
    };
    match dispatch(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(DomainError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
