//! Input documents, the example catalog, command dispatch and reports.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::arrangement::enumerate_strata;
use crate::error::{Error, Result};
use crate::integrality::{
    default_max_degree, verify_associativity, verify_hilbert, verify_isomorphism, Analysis,
    AssociativityLedger, HilbertLedger, IsomorphismLedger,
};
use crate::lattice::{
    symmetry_class, GroupData, IntMatrix, RepresentationData, SymmetryClass, Weight, WeightMultiset,
};
use crate::weyl::{enumerate_group, DEFAULT_GROUP_CAP};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WeightEntry {
    pub alpha: Vec<i64>,
    pub multiplicity: u32,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Options {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_degree: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group_cap: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    pub name: String,
    pub rank: usize,
    pub weyl_generators: Vec<Vec<Vec<i64>>>,
    pub g_weights: Vec<WeightEntry>,
    pub v_weights: Vec<WeightEntry>,
    #[serde(default)]
    pub options: Options,
}

/// Lattice data extracted from a document that passed validation.
#[derive(Clone, Debug)]
pub struct Validated {
    pub group: GroupData,
    pub rep: RepresentationData,
    pub warnings: Vec<String>,
}

fn multiset(field: &str, entries: &[WeightEntry], rank: usize) -> Result<WeightMultiset> {
    for (i, e) in entries.iter().enumerate() {
        if e.alpha.len() != rank {
            return Err(Error::input(format!(
                "{field}[{i}]: weight has length {}, expected {rank}",
                e.alpha.len()
            )));
        }
        if e.multiplicity == 0 {
            return Err(Error::input(format!(
                "{field}[{i}]: multiplicity must be positive"
            )));
        }
    }
    Ok(WeightMultiset::new(
        entries
            .iter()
            .map(|e| (Weight(e.alpha.clone()), e.multiplicity)),
    ))
}

fn entries(ws: &WeightMultiset) -> Vec<WeightEntry> {
    ws.entries()
        .iter()
        .map(|(w, m)| WeightEntry {
            alpha: w.0.clone(),
            multiplicity: *m,
        })
        .collect()
}

impl InputDocument {
    pub fn group_cap(&self) -> usize {
        self.options.group_cap.unwrap_or(DEFAULT_GROUP_CAP)
    }

    pub fn from_data(group: &GroupData, rep: &RepresentationData) -> Self {
        InputDocument {
            name: group.name.clone(),
            rank: group.rank,
            weyl_generators: group.weyl_generators.iter().map(|m| m.0.clone()).collect(),
            g_weights: entries(&group.g_weights),
            v_weights: entries(&rep.v_weights),
            options: Options::default(),
        }
    }

    /// Enforces every lattice-level constraint except weak symmetry.
    pub fn validate(&self) -> Result<Validated> {
        let n = self.rank;
        if n == 0 {
            return Err(Error::input("rank: must be positive"));
        }
        for (i, g) in self.weyl_generators.iter().enumerate() {
            if g.len() != n || g.iter().any(|r| r.len() != n) {
                return Err(Error::input(format!(
                    "weyl_generators[{i}]: expected a {n}x{n} matrix"
                )));
            }
        }
        let group = GroupData {
            name: self.name.clone(),
            rank: n,
            weyl_generators: self
                .weyl_generators
                .iter()
                .cloned()
                .map(IntMatrix)
                .collect(),
            g_weights: multiset("g_weights", &self.g_weights, n)?,
        };
        let rep = RepresentationData {
            v_weights: multiset("v_weights", &self.v_weights, n)?,
        };
        let warnings = group.validate_lattice()?;
        enumerate_group(n, &group.weyl_generators, self.group_cap())?;
        rep.validate_against(&group)?;
        Ok(Validated {
            group,
            rep,
            warnings,
        })
    }
}

pub fn parse_input(text: &str) -> Result<InputDocument> {
    let doc: InputDocument =
        serde_json::from_str(text).map_err(|e| Error::input(format!("malformed input: {e}")))?;
    doc.validate()?;
    Ok(doc)
}

fn w(c: &[i64]) -> Weight {
    Weight(c.to_vec())
}

fn group_named(name: &str) -> Option<GroupData> {
    let g = match name {
        "sl2" => GroupData {
            name: "sl2".into(),
            rank: 1,
            weyl_generators: vec![IntMatrix(vec![vec![-1]])],
            g_weights: WeightMultiset::from_weights([w(&[0]), w(&[2]), w(&[-2])]),
        },
        "gl2" => GroupData {
            name: "gl2".into(),
            rank: 2,
            weyl_generators: vec![IntMatrix(vec![vec![0, 1], vec![1, 0]])],
            g_weights: WeightMultiset::new([(w(&[0, 0]), 2), (w(&[1, -1]), 1), (w(&[-1, 1]), 1)]),
        },
        // Basis of the weight lattice in which the simple roots are (1,-1) and (1,2).
        "sl3" => GroupData {
            name: "sl3".into(),
            rank: 2,
            weyl_generators: vec![
                IntMatrix(vec![vec![0, 1], vec![1, 0]]),
                IntMatrix(vec![vec![1, -1], vec![0, -1]]),
            ],
            g_weights: WeightMultiset::new(
                [[1, -1], [-1, 1], [2, 1], [-2, -1], [1, 2], [-1, -2]]
                    .iter()
                    .map(|c| (w(c), 1))
                    .chain([(w(&[0, 0]), 2)]),
            ),
        },
        "gl3" => GroupData {
            name: "gl3".into(),
            rank: 3,
            weyl_generators: vec![
                IntMatrix(vec![vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 1]]),
                IntMatrix(vec![vec![1, 0, 0], vec![0, 0, 1], vec![0, 1, 0]]),
            ],
            g_weights: WeightMultiset::new(
                (0..3)
                    .flat_map(|i| (0..3).map(move |j| (i, j)))
                    .filter(|(i, j)| i != j)
                    .map(|(i, j)| {
                        let mut c = vec![0; 3];
                        c[i] += 1;
                        c[j] -= 1;
                        (Weight(c), 1)
                    })
                    .chain([(w(&[0, 0, 0]), 3)]),
            ),
        },
        _ => return None,
    };
    Some(g)
}

fn torus2() -> GroupData {
    GroupData {
        name: "torus2".into(),
        rank: 2,
        weyl_generators: vec![],
        g_weights: WeightMultiset::new([(w(&[0, 0]), 2)]),
    }
}

fn cotangent_weights(copies: u32) -> WeightMultiset {
    WeightMultiset::new(
        [[1, 0], [0, 1], [-1, 0], [0, -1]]
            .iter()
            .map(|c| (w(c), copies)),
    )
}

/// Keys accepted by [`catalog_emit`]; parameterized keys list one instance.
pub const CATALOG_KEYS: &[&str] = &[
    "torus2-cotangent",
    "gl2-cotangent",
    "gl2-cotangent:<g>",
    "sl2-irrep:<d>",
    "sl2-adjoint:<g>",
    "trivial:<sl2|gl2|sl3|gl3>",
    "adjoint:<sl2|gl2|sl3|gl3>",
];

fn parse_param(key: &str, raw: &str) -> Result<u32> {
    raw.parse()
        .map_err(|_| Error::input(format!("catalog key {key}: bad parameter {raw:?}")))
}

pub fn catalog_data(key: &str) -> Result<(GroupData, RepresentationData)> {
    let unknown = || Error::input(format!("unknown catalog key {key:?}"));
    let (head, param) = match key.split_once(':') {
        Some((h, p)) => (h, Some(p)),
        None => (key, None),
    };
    let (mut group, v_weights) = match (head, param) {
        ("torus2-cotangent", None) => (torus2(), cotangent_weights(1)),
        ("gl2-cotangent", p) => {
            let g = p.map(|p| parse_param(key, p)).transpose()?.unwrap_or(1);
            (group_named("gl2").unwrap(), cotangent_weights(g))
        }
        ("sl2-irrep", Some(p)) => {
            let d = i64::from(parse_param(key, p)?);
            if d == 0 {
                return Err(Error::input("sl2-irrep: dimension must be positive"));
            }
            (
                group_named("sl2").unwrap(),
                WeightMultiset::from_weights((0..d).map(|k| w(&[d - 1 - 2 * k]))),
            )
        }
        ("sl2-adjoint", Some(p)) => {
            let g = parse_param(key, p)?;
            (
                group_named("sl2").unwrap(),
                WeightMultiset::new([(w(&[2]), g), (w(&[0]), g), (w(&[-2]), g)]),
            )
        }
        ("trivial", Some(name)) => (
            group_named(name).ok_or_else(unknown)?,
            WeightMultiset::default(),
        ),
        ("adjoint", Some(name)) => {
            let g = group_named(name).ok_or_else(unknown)?;
            let v = g.g_weights.clone();
            (g, v)
        }
        _ => return Err(unknown()),
    };
    group.name = key.to_string();
    Ok((group, RepresentationData { v_weights }))
}

pub fn catalog_emit(key: &str) -> Result<InputDocument> {
    let (g, v) = catalog_data(key)?;
    Ok(InputDocument::from_data(&g, &v))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Validate,
    Strata,
    Bps,
    Verify,
    Molien,
    Catalog,
}

impl std::str::FromStr for Command {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "validate" => Command::Validate,
            "strata" => Command::Strata,
            "bps" => Command::Bps,
            "verify" => Command::Verify,
            "molien" => Command::Molien,
            "catalog" => Command::Catalog,
            _ => return Err(Error::input(format!("unknown command {s:?}"))),
        })
    }
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Validate => "validate",
            Command::Strata => "strata",
            Command::Bps => "bps",
            Command::Verify => "verify",
            Command::Molien => "molien",
            Command::Catalog => "catalog",
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Flags {
    pub max_degree: Option<u32>,
    pub group_cap: Option<usize>,
    pub orbit: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumSummary {
    pub index: usize,
    pub flat_dim: usize,
    pub flat_basis: Vec<Vec<i64>>,
    pub zero_v_size: u64,
    pub zero_g_size: u64,
    pub representative: Vec<i64>,
    pub dim_v_fixed: u64,
    pub dim_g_fixed: u64,
    pub d_lambda: i64,
    pub r_lambda: i64,
    pub orbit: usize,
    pub w_lower_order: usize,
    pub w_upper_order: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrataSection {
    pub count: usize,
    pub orbit_count: usize,
    pub weyl_order: usize,
    pub strata: Vec<StratumSummary>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EpsilonEntry {
    pub element: Vec<Vec<i64>>,
    pub value: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BpsSection {
    pub orbit: usize,
    pub stratum: usize,
    pub representative: Vec<i64>,
    pub d_lambda: i64,
    pub r_lambda: i64,
    pub total_dim: usize,
    /// Dimension per polynomial degree.
    pub poly_dims: Vec<usize>,
    /// Shifted degree to dimension.
    pub dt_table: BTreeMap<i64, usize>,
    pub euler: i64,
    pub epsilon: Vec<EpsilonEntry>,
    /// Basis polynomials per polynomial degree.
    pub basis: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationSection {
    pub max_degree: u32,
    pub hilbert: HilbertLedger,
    pub isomorphism: IsomorphismLedger,
    pub associativity: AssociativityLedger,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub input: InputDocument,
    pub symmetry: SymmetryClass,
    pub warnings: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub strata: Option<StrataSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bps: Option<Vec<BpsSection>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub molien: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verification: Option<VerificationSection>,
    pub status: String,
}

/// Chains sampled per input by `verify`.
pub const ASSOCIATIVITY_CHAINS: usize = 40;

fn strata_section(an: &Analysis) -> StrataSection {
    let s = &an.strat;
    StrataSection {
        count: s.strata.len(),
        orbit_count: s.orbits.len(),
        weyl_order: s.weyl.order(),
        strata: s
            .strata
            .iter()
            .map(|t| StratumSummary {
                index: t.index,
                flat_dim: t.flat.dim(),
                flat_basis: t.flat.basis().to_vec(),
                zero_v_size: t.zero_v.total(),
                zero_g_size: t.zero_g.total(),
                representative: t.rep.0.clone(),
                dim_v_fixed: t.dims.dim_v_fixed,
                dim_g_fixed: t.dims.dim_g_fixed,
                d_lambda: t.dims.d_lambda,
                r_lambda: t.dims.r_lambda,
                orbit: t.orbit,
                w_lower_order: t.w_lower.order(),
                w_upper_order: t.w_upper.order(),
            })
            .collect(),
    }
}

fn bps_sections(an: &Analysis, orbit: Option<usize>) -> Result<Vec<BpsSection>> {
    if let Some(k) = orbit {
        if k >= an.strat.orbits.len() {
            return Err(Error::input(format!(
                "--orbit {k}: only {} orbits",
                an.strat.orbits.len()
            )));
        }
    }
    let mut out = Vec::new();
    for (&idx, bps) in &an.bps {
        let t = &an.strat.strata[idx];
        if orbit.is_some_and(|k| k != t.orbit) {
            continue;
        }
        let eps = &an.eps[&idx];
        out.push(BpsSection {
            orbit: t.orbit,
            stratum: idx,
            representative: t.rep.0.clone(),
            d_lambda: t.dims.d_lambda,
            r_lambda: t.dims.r_lambda,
            total_dim: bps.total_dim(),
            poly_dims: bps.poly_dims(),
            dt_table: bps.dt_table.clone(),
            euler: bps.euler,
            epsilon: eps
                .values
                .iter()
                .map(|(&i, &v)| EpsilonEntry {
                    element: an.strat.weyl.element(i).matrix.0.clone(),
                    value: v,
                })
                .collect(),
            basis: bps
                .pieces
                .iter()
                .map(|p| p.polys().iter().map(ToString::to_string).collect())
                .collect(),
        });
    }
    Ok(out)
}

/// Runs a command on a document, returning the report and the exit code.
pub fn run(command: Command, doc: &InputDocument, flags: &Flags) -> Result<(Report, i32)> {
    let mut doc = doc.clone();
    if flags.group_cap.is_some() {
        doc.options.group_cap = flags.group_cap;
    }
    if flags.max_degree.is_some() {
        doc.options.max_degree = flags.max_degree;
    }
    let valid = doc.validate()?;
    let symmetry = symmetry_class(&valid.rep);
    let mut report = Report {
        command: command.name().to_string(),
        input: doc.clone(),
        symmetry,
        warnings: valid.warnings.clone(),
        strata: None,
        bps: None,
        molien: None,
        verification: None,
        status: "ok".into(),
    };
    match command {
        Command::Validate | Command::Catalog => {
            if !symmetry.is_weakly_symmetric() {
                report.status = "not weakly symmetric".into();
                return Ok((report, 1));
            }
            return Ok((report, 0));
        }
        _ => {}
    }
    if !symmetry.is_weakly_symmetric() {
        return Err(Error::NotWeaklySymmetric);
    }
    let cap = doc.group_cap();
    if command == Command::Strata {
        let strat = enumerate_strata(&valid.group, &valid.rep, cap)?;
        let an = Analysis {
            form: strat.weyl.averaged_form(),
            strat,
            bps: BTreeMap::new(),
            eps: BTreeMap::new(),
        };
        report.strata = Some(strata_section(&an));
        return Ok((report, 0));
    }
    if command == Command::Molien {
        let strat = enumerate_strata(&valid.group, &valid.rep, cap)?;
        let d = doc
            .options
            .max_degree
            .unwrap_or_else(|| default_max_degree(&strat));
        let an = Analysis {
            form: strat.weyl.averaged_form(),
            strat,
            bps: BTreeMap::new(),
            eps: BTreeMap::new(),
        };
        report.molien = Some(
            an.target_series(d as usize)
                .iter()
                .map(ToString::to_string)
                .collect(),
        );
        return Ok((report, 0));
    }
    let an = crate::integrality::analyze(&valid.group, &valid.rep, cap)?;
    report.strata = Some(strata_section(&an));
    report.bps = Some(bps_sections(&an, flags.orbit)?);
    if command == Command::Bps {
        return Ok((report, 0));
    }
    let d = doc
        .options
        .max_degree
        .unwrap_or_else(|| an.default_max_degree());
    let hilbert = verify_hilbert(&an, d)?;
    let isomorphism = verify_isomorphism(&an, d)?;
    let associativity = verify_associativity(&an.strat, ASSOCIATIVITY_CHAINS)?;
    let pass = hilbert.pass && isomorphism.pass && associativity.pass;
    report.molien = Some(
        an.target_series(d as usize)
            .iter()
            .map(ToString::to_string)
            .collect(),
    );
    report.verification = Some(VerificationSection {
        max_degree: d,
        hilbert,
        isomorphism,
        associativity,
        pass,
    });
    if pass {
        Ok((report, 0))
    } else {
        report.status = "verification failed".into();
        Ok((report, 2))
    }
}

pub fn render_json(report: &Report) -> String {
    serde_json::to_string_pretty(report).expect("report serializes")
}

pub fn render_text(report: &Report) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "command: {}", report.command);
    let _ = writeln!(
        s,
        "input: {} (rank {})",
        report.input.name, report.input.rank
    );
    let _ = writeln!(s, "symmetry: {}", report.symmetry);
    for w in &report.warnings {
        let _ = writeln!(s, "warning: {w}");
    }
    if let Some(st) = &report.strata {
        let _ = writeln!(
            s,
            "\nstrata: {} in {} orbits (|W| = {})",
            st.count, st.orbit_count, st.weyl_order
        );
        let _ = writeln!(
            s,
            "{:>3} {:>5} {:>4} {:>14} {:>5} {:>5} {:>4} {:>4} {:>5} {:>5}",
            "idx", "orbit", "flat", "rep", "dimV", "dimG", "d", "r", "|W_l|", "|W^l|"
        );
        for t in &st.strata {
            let _ = writeln!(
                s,
                "{:>3} {:>5} {:>4} {:>14} {:>5} {:>5} {:>4} {:>4} {:>5} {:>5}",
                t.index,
                t.orbit,
                t.flat_dim,
                format!("{:?}", t.representative),
                t.dim_v_fixed,
                t.dim_g_fixed,
                t.d_lambda,
                t.r_lambda,
                t.w_lower_order,
                t.w_upper_order
            );
        }
    }
    if let Some(bps) = &report.bps {
        let _ = writeln!(s, "\nBPS spaces:");
        for b in bps {
            let table: Vec<String> = b.dt_table.iter().map(|(i, d)| format!("{i}:{d}")).collect();
            let eps: Vec<String> = b.epsilon.iter().map(|e| format!("{:+}", e.value)).collect();
            let _ = writeln!(
                s,
                "  orbit {} (stratum {}, rep {:?}): dim {} dt {{{}}} euler {} eps [{}]",
                b.orbit,
                b.stratum,
                b.representative,
                b.total_dim,
                table.join(", "),
                b.euler,
                eps.join(" ")
            );
            for (p, polys) in b.basis.iter().enumerate() {
                if !polys.is_empty() {
                    let _ = writeln!(s, "    degree {p}: {}", polys.join(", "));
                }
            }
        }
    }
    if let Some(m) = &report.molien {
        let _ = writeln!(s, "\ntarget series: {}", m.join(", "));
    }
    if let Some(v) = &report.verification {
        let _ = writeln!(s, "\nverification up to degree {}:", v.max_degree);
        for (h, i) in v.hilbert.lines.iter().zip(&v.isomorphism.lines) {
            let _ = writeln!(
                s,
                "  p={:<2} hilbert {} = {} [{}]  images {}/{} rank {} [{}]",
                h.degree,
                h.expected,
                h.actual,
                if h.ok { "ok" } else { "FAIL" },
                i.images,
                i.target_dim,
                i.rank,
                if i.ok { "ok" } else { "FAIL" }
            );
        }
        let good = v.associativity.samples.iter().filter(|a| a.ok).count();
        let _ = writeln!(
            s,
            "  associativity: {good}/{} samples agree",
            v.associativity.samples.len()
        );
    }
    let _ = writeln!(s, "\nstatus: {}", report.status);
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_examples() {
        let d = catalog_emit("sl2-irrep:4").unwrap();
        let ws: Vec<Vec<i64>> = d.v_weights.iter().map(|e| e.alpha.clone()).collect();
        assert_eq!(ws, vec![vec![-3], vec![-1], vec![1], vec![3]]);
        let t = catalog_emit("torus2-cotangent").unwrap();
        assert_eq!(t.v_weights.len(), 4);
        assert!(t.weyl_generators.is_empty());
        let a = catalog_emit("adjoint:gl2").unwrap();
        assert_eq!(a.v_weights, a.g_weights);
        assert!(catalog_emit("nonsense").is_err());
        assert!(catalog_emit("sl2-irrep:x").is_err());
    }

    #[test]
    fn catalog_documents_validate() {
        for key in [
            "torus2-cotangent",
            "gl2-cotangent",
            "gl2-cotangent:3",
            "sl2-irrep:5",
            "sl2-adjoint:2",
            "trivial:sl3",
            "trivial:gl3",
            "adjoint:sl3",
            "adjoint:gl3",
        ] {
            let doc = catalog_emit(key).unwrap();
            let (_, code) = run(Command::Validate, &doc, &Flags::default()).unwrap();
            assert_eq!(code, 0, "{key}");
        }
    }

    #[test]
    fn parse_examples() {
        let torus = serde_json::to_string(&catalog_emit("torus2-cotangent").unwrap()).unwrap();
        assert!(parse_input(&torus).is_ok());

        let bad = r#"{"name":"x","rank":1,"weyl_generators":[],"g_weights":[{"alpha":[0],"multiplicity":1}],
                      "v_weights":[{"alpha":[1],"multiplicity":1}]}"#;
        let doc = parse_input(bad).unwrap();
        assert_eq!(
            run(Command::Bps, &doc, &Flags::default()).unwrap_err(),
            Error::NotWeaklySymmetric
        );
        assert_eq!(
            run(Command::Validate, &doc, &Flags::default()).unwrap().1,
            1
        );

        let singular = r#"{"name":"x","rank":2,"weyl_generators":[[[1,1],[1,1]]],
                           "g_weights":[{"alpha":[0,0],"multiplicity":2}],"v_weights":[]}"#;
        assert!(matches!(parse_input(singular), Err(Error::Input(_))));
        assert!(matches!(parse_input("{"), Err(Error::Input(_))));
    }

    #[test]
    fn weakly_symmetric_document_validates() {
        let doc = r#"{"name":"w","rank":1,"weyl_generators":[],"g_weights":[{"alpha":[0],"multiplicity":1}],
                      "v_weights":[{"alpha":[1],"multiplicity":1},{"alpha":[-2],"multiplicity":1}]}"#;
        let doc = parse_input(doc).unwrap();
        let (report, code) = run(Command::Validate, &doc, &Flags::default()).unwrap();
        assert_eq!(code, 0);
        assert_eq!(report.symmetry, SymmetryClass::WeaklySymmetric);
    }

    #[test]
    fn report_round_trips() {
        let doc = catalog_emit("gl2-cotangent").unwrap();
        let (report, code) = run(Command::Verify, &doc, &Flags::default()).unwrap();
        assert_eq!(code, 0);
        let json = render_json(&report);
        let back: Report = serde_json::from_str(&json).unwrap();
        assert_eq!(back, report);
        let again = render_json(&run(Command::Verify, &doc, &Flags::default()).unwrap().0);
        assert_eq!(json, again);
        assert!(render_text(&report).contains("status: ok"));
    }
}
