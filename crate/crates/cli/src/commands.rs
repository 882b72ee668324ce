//! The report-producing commands.

use std::collections::BTreeSet;

use ihull_core::hull::{self, Gen};
use ihull_core::semigroup::{Alignment, ElementId, SOrOne, Semigroup};
use ihull_core::spectrum::{self, Semilattice};
use ihull_core::strings::{self, StringSet};

use crate::error::CliError;
use crate::input::InputDocument;
use crate::report::{Cell, Report, Section};

/// Resource caps and switches shared by all commands.
#[derive(Copy, Clone, Debug)]
pub struct Options {
    pub max_hull: usize,
    pub max_cover: usize,
    pub oracle: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options { max_hull: 100_000, max_cover: 20, oracle: false }
    }
}

pub(crate) fn set_names(sg: &Semigroup, set: &BTreeSet<ElementId>) -> Vec<String> {
    let mut names: Vec<String> = set.iter().map(|&e| sg.name(e).to_string()).collect();
    names.sort();
    names
}

pub(crate) fn render_set(sg: &Semigroup, set: &BTreeSet<ElementId>) -> Cell {
    Cell::Set(set_names(sg, set))
}

/// Braced text form of a set, for prose and counterexample messages.
pub(crate) fn set_text(sg: &Semigroup, set: &BTreeSet<ElementId>) -> String {
    format!("{{{}}}", set_names(sg, set).join(","))
}

pub(crate) fn render_string(sg: &Semigroup, sigma: &StringSet) -> Cell {
    render_set(sg, sigma.elems())
}

/// The external unit renders as `1*` so it cannot collide with an element
/// named `1`.
pub(crate) fn render_stilde(sg: &Semigroup, u: SOrOne) -> String {
    match u {
        SOrOne::One => "1*".to_string(),
        SOrOne::Elem(e) => sg.name(e).to_string(),
    }
}

fn flag(b: bool) -> Cell {
    Cell::text(if b { "true" } else { "false" })
}

fn render_map(sg: &Semigroup, phi: &hull::PartialBijection) -> Cell {
    if phi.is_empty() {
        return Cell::text("{}");
    }
    let pairs: Vec<String> = phi
        .pairs()
        .map(|(x, y)| format!("{}->{}", sg.name(x), sg.name(y)))
        .collect();
    Cell::text(pairs.join(" "))
}

fn render_witness(sg: &Semigroup, word: &[Gen]) -> Cell {
    let parts: Vec<String> = word
        .iter()
        .map(|g| match g {
            Gen::Theta(s) => sg.name(*s).to_string(),
            Gen::ThetaInv(s) => format!("{}^-1", sg.name(*s)),
        })
        .collect();
    Cell::text(parts.join(" "))
}

fn lattice_for(sg: &Semigroup, options: &Options) -> Result<Semilattice, CliError> {
    Ok(spectrum::semilattice_of(sg, options.max_hull)?)
}

/// Structural flags, element classification, and the lcm/alignment table.
pub fn cmd_props(doc: &InputDocument, _options: &Options) -> Result<Report, CliError> {
    let sg = &doc.semigroup;
    let mut report = Report::new("properties");

    let mut summary = Section::new("summary", &["key", "value"]);
    summary.push(vec![Cell::text("elements"), Cell::text(sg.len().to_string())]);
    summary.push(vec![Cell::text("zero"), Cell::text(sg.name(sg.zero()))]);
    summary.push(vec![
        Cell::text("unit"),
        Cell::text(sg.unit().map(|u| sg.name(u).to_string()).unwrap_or_else(|| "-".into())),
    ]);
    report.sections.push(summary);

    let flags = sg.property_flags();
    let mut props = Section::new("structural flags", &["flag", "value"]);
    for (name, value) in [
        ("zero_left_cancellative", flags.zero_left_cancellative),
        ("zero_right_cancellative", flags.zero_right_cancellative),
        ("categorical_at_zero", flags.categorical_at_zero),
        ("right_reductive", flags.right_reductive),
        ("right_local_units", flags.right_local_units),
        ("unital", flags.unital),
        ("admits_lcms", flags.admits_lcms),
    ] {
        props.push(vec![Cell::text(name), flag(value)]);
    }
    report.sections.push(props);

    let mut elements = Section::new(
        "elements",
        &["element", "idempotent", "prime", "irreducible", "degenerate", "right_unit"],
    );
    for s in sg.nonzero_elements() {
        let class = sg.classify(s)?;
        elements.push(vec![
            Cell::text(sg.name(s)),
            flag(class.idempotent),
            flag(class.prime),
            flag(class.irreducible),
            flag(class.degenerate),
            Cell::text(
                class
                    .right_unit
                    .map(|e| sg.name(e).to_string())
                    .unwrap_or_else(|| "-".into()),
            ),
        ]);
    }
    report.sections.push(elements);

    let mut pairs = Section::new("pairs", &["s", "t", "lcm", "alignment"]);
    for s in sg.nonzero_elements() {
        for t in sg.nonzero_elements() {
            if t < s {
                continue;
            }
            let lcm = sg
                .lcm(s, t)
                .map(|r| sg.name(r).to_string())
                .unwrap_or_else(|| "-".into());
            let alignment = match sg.alignment(s, t)? {
                Alignment::Principal(r) => format!("principal({})", sg.name(r)),
                Alignment::Basis(b) => format!(
                    "basis({})",
                    b.iter().map(|&x| sg.name(x)).collect::<Vec<_>>().join(",")
                ),
                Alignment::Generating(b) => format!(
                    "generating({})",
                    b.iter().map(|&x| sg.name(x)).collect::<Vec<_>>().join(",")
                ),
                Alignment::None => "none".into(),
            };
            pairs.push(vec![
                Cell::text(sg.name(s)),
                Cell::text(sg.name(t)),
                Cell::text(lcm),
                Cell::text(alignment),
            ]);
        }
    }
    report.sections.push(pairs);
    Ok(report)
}

/// The inverse hull: size and the element table with witnesses.
pub fn cmd_hull(doc: &InputDocument, options: &Options) -> Result<Report, CliError> {
    let sg = &doc.semigroup;
    let hull = hull::generate_hull(sg, options.max_hull)?;
    let mut report = Report::new("inverse hull");

    let mut summary = Section::new("summary", &["key", "value"]);
    summary.push(vec![Cell::text("elements"), Cell::text(hull.len().to_string())]);
    summary.push(vec![
        Cell::text("idempotents"),
        Cell::text(
            hull.elements()
                .iter()
                .filter(|e| e.is_identity_map())
                .count()
                .to_string(),
        ),
    ]);
    report.sections.push(summary);

    let mut table = Section::new(
        "elements",
        &["index", "map", "idempotent", "domain", "range", "witness"],
    );
    for (i, phi) in hull.elements().iter().enumerate() {
        table.push(vec![
            Cell::text(i.to_string()),
            render_map(sg, phi),
            flag(phi.is_identity_map()),
            render_set(sg, &phi.domain()),
            render_set(sg, &phi.range()),
            render_witness(sg, hull.witness(i)),
        ]);
    }
    report.sections.push(table);
    Ok(report)
}

fn constructible_labels(sg: &Semigroup, x: &BTreeSet<ElementId>) -> Cell {
    let mut labels = Vec::new();
    for s in sg.nonzero_elements() {
        if sg.f_set(s) == *x {
            labels.push(format!("F({})", sg.name(s)));
        }
        if sg.e_set(s) == *x {
            labels.push(format!("E({})", sg.name(s)));
        }
    }
    Cell::text(labels.join(" "))
}

/// The constructible sets, with matching `F_s`/`E_s` annotations, cross
/// checked against the closure characterization when `--oracle` is on.
pub fn cmd_constructible(doc: &InputDocument, options: &Options) -> Result<Report, CliError> {
    let sg = &doc.semigroup;
    let sets = hull::constructible_sets(sg, options.max_hull)?;
    if options.oracle {
        let by_closure = ihull_core::oracle::constructible_by_closure(sg);
        if sets != by_closure {
            return Err(CliError::Verification(
                "constructible sets disagree with the closure characterization".into(),
            ));
        }
    }
    let mut report = Report::new("constructible sets");
    let mut table = Section::new("sets", &["index", "set", "labels"]);
    for (i, x) in sets.iter().enumerate() {
        table.push(vec![
            Cell::text(i.to_string()),
            render_set(sg, x),
            constructible_labels(sg, x),
        ]);
    }
    report.sections.push(table);
    Ok(report)
}

/// Strings, their classification, and the star-action domain tables.
pub fn cmd_strings(doc: &InputDocument, options: &Options) -> Result<Report, CliError> {
    let sg = &doc.semigroup;
    let all = strings::all_strings(sg);
    if options.oracle {
        let mut sorted = all.clone();
        sorted.sort();
        let by_enumeration = ihull_core::oracle::strings_by_enumeration(sg)
            .map_err(|e| CliError::Budget(e.to_string()))?;
        if sorted != by_enumeration {
            return Err(CliError::Verification(
                "strings disagree with subset enumeration".into(),
            ));
        }
    }
    let mut report = Report::new("strings");
    let mut table = Section::new(
        "strings",
        &["string", "open", "maximal", "degenerate", "prime_singleton"],
    );
    for sigma in &all {
        let class = strings::classify_string(sg, sigma);
        table.push(vec![
            render_string(sg, sigma),
            flag(class.open),
            flag(class.maximal),
            flag(class.degenerate),
            flag(class.prime_singleton),
        ]);
    }
    report.sections.push(table);

    let mut domains = Section::new("star domains", &["element", "F*", "E*"]);
    for r in sg.nonzero_elements() {
        let (fs, es) = strings::star_domains(sg, r);
        let as_sets = |list: &[StringSet]| {
            Cell::Sets(list.iter().map(|s| set_names(sg, s.elems())).collect())
        };
        domains.push(vec![Cell::text(sg.name(r)), as_sets(&fs), as_sets(&es)]);
    }
    report.sections.push(domains);
    Ok(report)
}

/// The semilattice, its filters, and per-character classification.
pub fn cmd_spectrum(doc: &InputDocument, options: &Options) -> Result<Report, CliError> {
    let sg = &doc.semigroup;
    let lattice = lattice_for(sg, options)?;
    let mut report = Report::new("spectrum");

    let mut members = Section::new("semilattice", &["index", "set"]);
    for (i, x) in lattice.members().iter().enumerate() {
        members.push(vec![Cell::text(i.to_string()), render_set(sg, x)]);
    }
    report.sections.push(members);

    let e1 = spectrum::e1_ideal(sg, &lattice);
    let mut ideal = Section::new("principal-range ideal", &["index", "set"]);
    for &i in &e1 {
        ideal.push(vec![Cell::text(i.to_string()), render_set(sg, lattice.member(i))]);
    }
    report.sections.push(ideal);

    let mut chars = Section::new(
        "characters",
        &["least member", "ultra", "tight", "ground", "open", "sigma"],
    );
    for filter in spectrum::filters(&lattice) {
        let phi = spectrum::char_of(&lattice, &filter);
        let class = spectrum::classify_character(sg, &lattice, &phi);
        let sigma = spectrum::sigma_from_char(sg, &lattice, &phi);
        chars.push(vec![
            render_set(sg, lattice.member(filter.min_member(&lattice))),
            flag(spectrum::is_ultra(&lattice, &filter)),
            flag(spectrum::is_tight(&lattice, &phi, options.max_cover)?),
            flag(class.ground),
            flag(class.open),
            render_set(sg, &sigma),
        ]);
    }
    report.sections.push(chars);
    Ok(report)
}

/// The ultracharacter census.
pub fn cmd_census(doc: &InputDocument, options: &Options) -> Result<Report, CliError> {
    let sg = &doc.semigroup;
    let census = spectrum::ultra_census(sg, options.max_hull)?;
    let lattice = lattice_for(sg, options)?;
    let mut report = Report::new("ultracharacter census");

    let mut summary = Section::new("summary", &["key", "value"]);
    summary.push(vec![
        Cell::text("ultracharacters"),
        Cell::text((census.open_ultras.len() + census.nonopen_ultras.len()).to_string()),
    ]);
    summary.push(vec![Cell::text("open"), Cell::text(census.open_ultras.len().to_string())]);
    summary.push(vec![
        Cell::text("non-open"),
        Cell::text(census.nonopen_ultras.len().to_string()),
    ]);
    report.sections.push(summary);

    let mut open = Section::new("open ultracharacters", &["string", "least member"]);
    for (sigma, phi) in &census.open_ultras {
        let filter = spectrum::filter_of(&lattice, phi)?;
        open.push(vec![
            render_string(sg, sigma),
            render_set(sg, lattice.member(filter.min_member(&lattice))),
        ]);
    }
    report.sections.push(open);

    let mut nonopen =
        Section::new("non-open ultracharacters", &["unit part", "ground least member"]);
    for (u, ground, _phi) in &census.nonopen_ultras {
        let filter = spectrum::filter_of(&lattice, ground)?;
        nonopen.push(vec![
            Cell::text(render_stilde(sg, *u)),
            render_set(sg, lattice.member(filter.min_member(&lattice))),
        ]);
    }
    report.sections.push(nonopen);

    let mut quasi = Section::new("quasi-maximal strings", &["string", "maximal"]);
    for sigma in &census.quasi_maximal_strings {
        quasi.push(vec![
            render_string(sg, sigma),
            flag(strings::classify_string(sg, sigma).maximal),
        ]);
    }
    report.sections.push(quasi);
    Ok(report)
}

/// Dispatch table used by `main` and the tests.
pub fn run_command(
    name: &str,
    doc: &InputDocument,
    options: &Options,
) -> Result<Report, CliError> {
    match name {
        "props" => cmd_props(doc, options),
        "hull" => cmd_hull(doc, options),
        "constructible" => cmd_constructible(doc, options),
        "strings" => cmd_strings(doc, options),
        "spectrum" => cmd_spectrum(doc, options),
        "census" => cmd_census(doc, options),
        other => Err(CliError::Input(format!("unknown command `{other}`"))),
    }
}
