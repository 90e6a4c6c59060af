//! Lattice input resolution: a lattice argument is a JSON file path, `-`
//! for standard input, or a stock name such as `m3`, `chain:4`,
//! `boolean:3`, or `sub:2,2`.

use latkit::io::from_json;
use latkit::lattice::{hexagon, m3, n5, BuildOptions, FiniteLattice, DEFAULT_MAX_ELEMENTS};
use std::io::Read;
use std::path::Path;

/// A domain-level failure: the command was well-formed but the work could
/// not be done.
pub struct DomainError(pub String);

impl<E: std::fmt::Display> From<E> for DomainError {
    fn from(e: E) -> Self {
        DomainError(e.to_string())
    }
}

pub type CliResult<T> = Result<T, DomainError>;

fn parse_stock(token: &str) -> Option<CliResult<FiniteLattice>> {
    match token {
        "m3" => return Some(Ok(m3())),
        "n5" => return Some(Ok(n5())),
        "hexagon" => return Some(Ok(hexagon())),
        "doubled-m3" => return Some(Ok(latkit::corpus::doubled_m3())),
        _ => {}
    }
    let (kind, params) = token.split_once(':')?;
    match kind {
        "chain" => {
            let n: usize = match params.parse() {
                Ok(n) => n,
                Err(e) => return Some(Err(DomainError(format!("chain size: {e}")))),
            };
            Some(latkit::lattice::stock(latkit::lattice::Stock::Chain(n)).map_err(Into::into))
        }
        "boolean" => {
            let m: usize = match params.parse() {
                Ok(m) => m,
                Err(e) => return Some(Err(DomainError(format!("boolean rank: {e}")))),
            };
            Some(latkit::lattice::stock(latkit::lattice::Stock::Boolean(m)).map_err(Into::into))
        }
        "sub" => {
            let Some((p, n)) = params.split_once(',') else {
                return Some(Err(DomainError(format!(
                    "subspace lattice token needs two parameters, got `{params}`"
                ))));
            };
            let (p, n) = match (p.parse::<u64>(), n.parse::<usize>()) {
                (Ok(p), Ok(n)) => (p, n),
                _ => {
                    return Some(Err(DomainError(format!(
                        "subspace lattice parameters must be numbers, got `{params}`"
                    ))))
                }
            };
            Some(latkit::gf::sub_lattice(p, n).map_err(Into::into))
        }
        _ => None,
    }
}

fn read_stdin() -> CliResult<String> {
    let mut src = String::new();
    std::io::stdin()
        .read_to_string(&mut src)
        .map_err(|e| DomainError(format!("reading standard input: {e}")))?;
    Ok(src)
}

fn build_from_source(src: &str, what: &str, limit: Option<usize>) -> CliResult<FiniteLattice> {
    let opts = BuildOptions {
        strict: true,
        max_elements: limit.unwrap_or(DEFAULT_MAX_ELEMENTS),
    };
    let (lattice, _warnings) =
        from_json(src, opts).map_err(|e| DomainError(format!("{what}: {e}")))?;
    Ok(lattice)
}

/// Resolves a lattice argument. `None` reads standard input, which is what
/// makes command pipelines work.
pub fn resolve_lattice(token: Option<&str>, limit: Option<usize>) -> CliResult<FiniteLattice> {
    let Some(token) = token else {
        return build_from_source(&read_stdin()?, "standard input", limit);
    };
    if token == "-" {
        return build_from_source(&read_stdin()?, "standard input", limit);
    }
    if Path::new(token).exists() {
        let src = std::fs::read_to_string(token)
            .map_err(|e| DomainError(format!("reading {token}: {e}")))?;
        return build_from_source(&src, token, limit);
    }
    match parse_stock(token) {
        Some(result) => result,
        None => Err(DomainError(format!(
            "`{token}` is neither an existing file nor a stock lattice \
             (try m3, n5, hexagon, doubled-m3, chain:<n>, boolean:<m>, sub:<p>,<n>, or -)"
        ))),
    }
}
