use std::fs;
use std::path::Path;

use serde::Serialize;
use serde_json::{json, Value};

use primex::affine::recover_affine;
use primex::blocks::is_primitive;
use primex::cohomology::cohomology;
use primex::dyadic::{classify_quartic, eisenstein_scan};
use primex::enumerate::{manifest, solvable_primitive_groups, write_classification};
use primex::extensions::{complement_summary, complements, ExtensionPresentation};
use primex::modrep::{irreducible_solvable_subgroups, natural_representation};
use primex::perm::io::{parse_group, parse_permutation};
use primex::perm::{is_maximal, MAX_SUBGROUP_SCAN_ORDER};
use primex::{AffineReport, Error, LinearRepresentation, PermutationGroup};

use crate::cli::{CohomArgs, Command, EnumerateArgs, ExtCommand, GroupCommand, QuarticCommand};

/// A failed command: machine-readable code plus message.
#[derive(Debug)]
pub struct Failure {
    pub code: &'static str,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let message = match &e {
            Error::Precondition(reason) => reason.clone(),
            other => other.to_string(),
        };
        Failure {
            code: e.code(),
            message,
        }
    }
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: "USAGE",
            message: message.into(),
        }
    }

    fn io(path: &Path, e: std::io::Error) -> Self {
        Failure {
            code: "IO",
            message: format!("{}: {e}", path.display()),
        }
    }
}

type Outcome = Result<Value, Failure>;

fn to_json(value: impl Serialize) -> Value {
    serde_json::to_value(value).expect("payload types serialize")
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::io(path, e))
}

fn read_group(path: &Path) -> Result<PermutationGroup, Failure> {
    Ok(parse_group(&read(path)?)?)
}

/// `N ≤ L` from `;`-separated generator lines.
fn parse_normal(l_group: &PermutationGroup, spec: &str) -> Result<PermutationGroup, Failure> {
    let gens = spec
        .split(';')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .enumerate()
        .map(|(i, s)| parse_permutation(s, l_group.degree(), i + 1))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(l_group.subgroup(gens)?)
}

/// From `FILE --normal gens`, or from a file with a `normal k` section.
fn extension(file: &Path, normal: Option<&str>) -> Result<ExtensionPresentation, Failure> {
    match normal {
        Some(spec) => {
            let l_group = read_group(file)?;
            let n = parse_normal(&l_group, spec)?;
            Ok(ExtensionPresentation::new(l_group, n)?)
        }
        None => Ok(ExtensionPresentation::parse(&read(file)?)?),
    }
}

fn parse_list<T: std::str::FromStr>(spec: &str, what: &str) -> Result<Vec<T>, Failure> {
    spec.split(',')
        .map(|s| s.trim().parse::<T>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| Failure::usage(format!("invalid {what} `{spec}`")))
}

pub fn run(command: &Command) -> Outcome {
    match command {
        Command::Group(GroupCommand::Info { file }) => group_info(&read_group(file)?),
        Command::Group(GroupCommand::Affine { file }) => group_affine(&read_group(file)?),
        Command::Cohom(args) => cohom(args),
        Command::Ext(ExtCommand::Complements { file, normal }) => ext_complements(&extension(file, normal.as_deref())?),
        Command::Enumerate(args) => enumerate(args),
        Command::Quartic(QuarticCommand::Classify { coeffs, precision }) => quartic_classify(coeffs, *precision),
        Command::Quartic(QuarticCommand::Scan { mod_bits }) => Ok(to_json(eisenstein_scan(*mod_bits)?)),
    }
}

fn group_info(g: &PermutationGroup) -> Outcome {
    let series = g.derived_series();
    let solvable = series.last().is_some_and(PermutationGroup::is_trivial);
    let primitive = if g.degree() < 2 { None } else { Some(is_primitive(g)?) };
    let stabilizer_maximal = if g.order() <= MAX_SUBGROUP_SCAN_ORDER && g.is_transitive() {
        Some(is_maximal(g, &g.point_stabilizer(0)?)?)
    } else {
        None
    };
    let mut orbit_sizes: Vec<usize> = g.orbits().iter().map(Vec::len).collect();
    orbit_sizes.sort_unstable();
    Ok(json!({
        "degree": g.degree(),
        "order": to_json(g.order()),
        "orbit_sizes": orbit_sizes,
        "transitive": g.is_transitive(),
        "primitive": primitive,
        "solvable": solvable,
        "derived_length": solvable.then(|| series.len() - 1),
        "stabilizer_maximal": stabilizer_maximal,
    }))
}

fn group_affine(g: &PermutationGroup) -> Outcome {
    let recovery = recover_affine(g)?;
    let point_group = recovery.point_group_representation()?;
    let mut payload = to_json(AffineReport::from(&recovery));
    payload["point_group_order"] = to_json(point_group.group().order());
    Ok(payload)
}

fn cohom(args: &CohomArgs) -> Outcome {
    let (rep, quotient_order): (LinearRepresentation, u128) = match (&args.gl_subgroup, &args.file) {
        (Some(spec), file) => {
            let parts: Vec<usize> = parse_list(spec, "--gl-subgroup")?;
            match (parts.as_slice(), file) {
                (&[n, l], Some(file)) => {
                    let rep = natural_representation(&read_group(file)?, l as u32, n)?;
                    let order = rep.group().order();
                    (rep, order)
                }
                (&[n, l, i], None) => {
                    let reps = irreducible_solvable_subgroups(n, l as u32)?;
                    let count = reps.len();
                    let rep = reps.into_iter().nth(i).ok_or_else(|| {
                        Failure::usage(format!("GL({n},{l}) has {count} irreducible solvable classes"))
                    })?;
                    let order = rep.group().order();
                    (rep, order)
                }
                _ => {
                    return Err(Failure::usage(
                        "--gl-subgroup takes n,l with a FILE, or n,l,i without one",
                    ))
                }
            }
        }
        (None, Some(file)) => {
            let e = extension(file, args.normal.as_deref())?;
            let order = e.quotient_order();
            (e.induced.rep, order)
        }
        (None, None) => return Err(Failure::usage("cohom needs a FILE or --gl-subgroup n,l,i")),
    };
    let mut payload = to_json(cohomology(&rep)?);
    payload["quotient_order"] = to_json(quotient_order);
    Ok(payload)
}

fn ext_complements(e: &ExtensionPresentation) -> Outcome {
    let summary = complement_summary(e)?;
    let found: Vec<Vec<Vec<usize>>> = complements(e)?
        .iter()
        .map(|h| h.canonical_generators().iter().map(|g| g.images()).collect())
        .collect();
    let mut payload = to_json(summary);
    payload["complements"] = to_json(found);
    payload["quotient_order"] = to_json(e.quotient_order());
    payload["normal_order"] = to_json(e.normal.order());
    Ok(payload)
}

fn enumerate(args: &EnumerateArgs) -> Outcome {
    let entries = solvable_primitive_groups(args.l, args.n)?;
    let m = match &args.out {
        Some(dir) => write_classification(dir, args.l, args.n, &entries).map_err(|e| Failure::io(dir, e))?,
        None => manifest(args.l, args.n, &entries),
    };
    Ok(to_json(m))
}

fn quartic_classify(coeffs: &str, precision: u32) -> Outcome {
    let c: Vec<i128> = parse_list(coeffs, "--coeffs")?;
    let [a, b, c, d] = c[..] else {
        return Err(Failure::usage(format!("--coeffs needs four integers, got `{coeffs}`")));
    };
    Ok(to_json(classify_quartic(a, b, c, d, precision)?))
}
