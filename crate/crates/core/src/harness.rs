//! The verification grid and its JSON report.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact_algebra::{format_rational, parse_rational, Laurent, Scalar};
use crate::families::sampler::sample_specs;
use crate::families::{FamilyData, FamilyKind, FamilySpec};
use crate::relations::{Basis, Checker, Expect, Identity, IdentityId};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub families: Vec<FamilyKind>,
    pub identities: Vec<IdentityId>,
    pub n_max: usize,
    pub samples: usize,
    pub seed: u64,
    pub degree_cap: usize,
    /// Largest degree for operator matrix identities.
    pub matrix_degree: usize,
    /// A single parameter point instead of sampling.
    pub params: Option<BTreeMap<String, Scalar>>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            families: FamilyKind::ALL.to_vec(),
            identities: IdentityId::ALL.to_vec(),
            n_max: 10,
            samples: 20,
            seed: 0,
            degree_cap: 16,
            matrix_degree: 12,
            params: None,
        }
    }
}

impl VerifyConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n_max == 0 {
            return Err(Error::Parse("n-max must be at least 1".into()));
        }
        if self.n_max + 2 > self.degree_cap {
            return Err(Error::Parse(format!(
                "n-max {} needs a degree cap of at least {}",
                self.n_max,
                self.n_max + 2
            )));
        }
        if self.params.is_some() && self.families.len() != 1 {
            return Err(Error::Parse("--params needs exactly one family".into()));
        }
        Ok(())
    }

    fn specs(&self, kind: FamilyKind) -> Result<Vec<FamilySpec>> {
        match &self.params {
            Some(m) => {
                let s = FamilySpec::from_params(kind, m)?;
                s.check_admissible(self.degree_cap)?;
                Ok(vec![s])
            }
            None => sample_specs(kind, self.samples, self.seed, self.degree_cap),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Info,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Residual {
    pub degree: i64,
    pub coeffs: Vec<String>,
}

impl Residual {
    /// `None` for an exactly vanishing residual. Polynomials in `x` and flat
    /// arrays list coefficients from the constant term up; symmetric `z`
    /// residuals are converted to `x` first, others list `z^lo..=z^hi`.
    pub fn from_laurent(r: &Laurent, basis: Basis) -> Option<Self> {
        if r.is_zero() {
            return None;
        }
        let hi = r.hi().unwrap_or(0);
        let fmt = |v: &[Scalar]| v.iter().map(format_rational).collect::<Vec<_>>();
        if basis == Basis::Z {
            if let Ok(s) = r.to_sym() {
                let x = s.to_x();
                return Some(Self { degree: x.degree().unwrap_or(0) as i64, coeffs: fmt(x.coeffs()) });
            }
            return Some(Self { degree: hi, coeffs: fmt(r.coeffs()) });
        }
        let lo = r.lo().unwrap_or(0).min(0);
        let coeffs: Vec<Scalar> = (lo..=hi).map(|k| r.coeff(k)).collect();
        Some(Self { degree: hi, coeffs: fmt(&coeffs) })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResultEntry {
    pub identity_id: String,
    pub family: String,
    pub params: BTreeMap<String, String>,
    pub n: usize,
    pub status: Status,
    pub residual: Option<Residual>,
}

impl ResultEntry {
    fn from_identity(spec: &FamilySpec, i: &Identity) -> Self {
        let status = match i.expect {
            Expect::Info => Status::Info,
            _ if i.holds() => Status::Pass,
            _ => Status::Fail,
        };
        let mut params: BTreeMap<String, String> =
            spec.params().iter().map(|(k, v)| (k.clone(), format_rational(v))).collect();
        for (k, v) in &i.extra {
            params.insert(k.clone(), format_rational(v));
        }
        Self {
            identity_id: i.id.name().to_string(),
            family: spec.kind().name().to_string(),
            params,
            n: i.n,
            status,
            residual: Residual::from_laurent(&i.residual(), i.basis),
        }
    }

    fn failure(spec: &FamilySpec, id: IdentityId, n: usize) -> Self {
        Self {
            identity_id: id.name().to_string(),
            family: spec.kind().name().to_string(),
            params: spec.params().iter().map(|(k, v)| (k.clone(), format_rational(v))).collect(),
            n,
            status: Status::Fail,
            residual: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunInfo {
    pub seed: u64,
    pub degree_cap: usize,
    pub timestamp: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub run: RunInfo,
    pub results: Vec<ResultEntry>,
    /// Errors raised while checking, in grid order; not serialized.
    #[serde(skip)]
    pub errors: Vec<String>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.errors.is_empty() && self.results.iter().all(|r| r.status != Status::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    /// One line per (identity, family): counts of checked, passed, failed
    /// and informational results.
    pub fn summary_csv(&self) -> String {
        let mut counts: BTreeMap<(String, String), [usize; 3]> = BTreeMap::new();
        for r in &self.results {
            let c = counts.entry((r.identity_id.clone(), r.family.clone())).or_default();
            c[r.status as usize] += 1;
        }
        let mut out = String::from("identity_id,family,checked,passed,failed,info\n");
        for ((id, fam), [p, f, i]) in counts {
            out.push_str(&format!("{id},{fam},{},{p},{f},{i}\n", p + f + i));
        }
        out
    }
}

fn check_cell(spec: &FamilySpec, cfg: &VerifyConfig) -> (Vec<ResultEntry>, Vec<String>) {
    let mut out = Vec::new();
    let mut errors = Vec::new();
    let data = match FamilyData::build(spec.clone(), cfg.degree_cap) {
        Ok(d) => d,
        Err(e) => {
            errors.push(format!("{} {:?}: {e}", spec.kind(), spec.params()));
            return (out, errors);
        }
    };
    let checker = match Checker::new(&data) {
        Ok(c) => c,
        Err(e) => {
            errors.push(format!("{} {:?}: {e}", spec.kind(), spec.params()));
            return (out, errors);
        }
    };
    for &id in &cfg.identities {
        let deg = if id.is_pairing() { cfg.n_max } else { cfg.matrix_degree };
        match checker.check(id, cfg.n_max, deg) {
            Ok(list) => out.extend(list.iter().map(|i| ResultEntry::from_identity(spec, i))),
            Err(e) => {
                errors.push(format!("{id} on {} {:?}: {e}", spec.kind(), spec.params()));
                out.push(ResultEntry::failure(spec, id, cfg.n_max));
            }
        }
    }
    (out, errors)
}

/// Runs every selected identity on every sampled parameter point. Cells run
/// in parallel; results keep grid order (family, sample, identity, n).
pub fn run_verify(cfg: &VerifyConfig, timestamp: Option<String>) -> Result<Report> {
    cfg.validate()?;
    let mut specs = Vec::new();
    for &kind in &cfg.families {
        specs.extend(cfg.specs(kind)?);
    }
    let cells: Vec<(Vec<ResultEntry>, Vec<String>)> = specs.par_iter().map(|s| check_cell(s, cfg)).collect();
    let mut results = Vec::new();
    let mut errors = Vec::new();
    for (r, e) in cells {
        results.extend(r);
        errors.extend(e);
    }
    Ok(Report { run: RunInfo { seed: cfg.seed, degree_cap: cfg.degree_cap, timestamp }, results, errors })
}

/// Parses `a=1/3,b=1/4` into named rationals.
pub fn parse_params(s: &str) -> Result<BTreeMap<String, Scalar>> {
    let mut out = BTreeMap::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (k, v) = part
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("expected name=value, got '{part}'")))?;
        if out.insert(k.trim().to_string(), parse_rational(v.trim())?).is_some() {
            return Err(Error::Parse(format!("parameter '{}' given twice", k.trim())));
        }
    }
    Ok(out)
}

/// Flat `key=value` config text. Blank lines and `#` comments are skipped;
/// keys are flag names without the leading dashes.
pub fn parse_config_file(text: &str) -> Result<BTreeMap<String, String>> {
    let mut out = BTreeMap::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("line {}: expected key=value", i + 1)))?;
        out.insert(k.trim().to_string(), v.trim().to_string());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::{int, rat};

    #[test]
    fn config_text() {
        let m = parse_config_file("# grid\nseed = 7\n\nfamily=jacobi # inline\n").unwrap();
        assert_eq!(m["seed"], "7");
        assert_eq!(m["family"], "jacobi");
        assert!(parse_config_file("seed 7").is_err());
    }

    #[test]
    fn params_text() {
        let m = parse_params("a=1/3, b=-0.25").unwrap();
        assert_eq!(m["a"], rat(1, 3));
        assert_eq!(m["b"], rat(-1, 4));
        assert!(parse_params("a=1,a=2").is_err());
        assert!(parse_params("a").is_err());
    }

    #[test]
    fn residual_layout() {
        assert_eq!(Residual::from_laurent(&Laurent::zero(), Basis::X), None);
        let r = Laurent::from_coeffs(1, vec![int(2)]);
        let got = Residual::from_laurent(&r, Basis::X).unwrap();
        assert_eq!(got, Residual { degree: 1, coeffs: vec!["0/1".into(), "2/1".into()] });
        // z + 1/z is 2x
        let z = Laurent::from_coeffs(-1, vec![int(1), int(0), int(1)]);
        let got = Residual::from_laurent(&z, Basis::Z).unwrap();
        assert_eq!(got, Residual { degree: 1, coeffs: vec!["0/1".into(), "2/1".into()] });
        let skew = Laurent::from_coeffs(-1, vec![int(-1), int(0), int(1)]);
        assert_eq!(Residual::from_laurent(&skew, Basis::Z).unwrap().coeffs.len(), 3);
    }

    #[test]
    fn small_grid_is_deterministic_and_passes() {
        let cfg = VerifyConfig {
            families: vec![FamilyKind::Jacobi],
            identities: vec![IdentityId::Structure, IdentityId::Commutator],
            n_max: 3,
            samples: 2,
            seed: 5,
            degree_cap: 6,
            matrix_degree: 4,
            params: None,
        };
        let a = run_verify(&cfg, None).unwrap();
        let b = run_verify(&cfg, None).unwrap();
        assert_eq!(a.to_json(), b.to_json());
        assert!(a.all_passed());
        assert_eq!(a.results.len(), 2 * (3 + 1));
        assert!(a.to_json().contains("\"timestamp\": null"));
        assert!(a.summary_csv().contains("structure,jacobi,6,6,0,0"));
    }

    #[test]
    fn validation() {
        let cfg = VerifyConfig { n_max: 10, degree_cap: 11, ..Default::default() };
        assert!(cfg.validate().is_err());
        let cfg = VerifyConfig { params: Some(BTreeMap::new()), ..Default::default() };
        assert!(cfg.validate().is_err());
    }
}
