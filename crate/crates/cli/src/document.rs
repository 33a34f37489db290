//! Versioned JSON documents for pairs, schemes and origamis.
//!
//! All indices are 0-based. A permutation is stored as its image array:
//! entry `x` is the crossing that follows `x`.

use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Read, Write};
use std::path::Path;

use fillpair_core::{
    CrossingPosition, CurvePair, GammaArc, Origami, Permutation, PointScheme, Scheme, Side,
    SurgeryKind,
};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::CliError;
use crate::json;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairDocument {
    pub version: u32,
    pub n: usize,
    /// Image array of the successor map along `α`.
    pub alpha_order: Vec<usize>,
    /// Image array of the successor map along `β`.
    pub beta_order: Vec<usize>,
    /// Crossing signs, `1` or `-1`; absent means all positive.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub signs: Option<Vec<i64>>,
    /// Face id to number of punctures in that face.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub punctures: BTreeMap<usize, u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<Provenance>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Provenance {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub construction: Option<String>,
    pub scheme: SchemeDocument,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SchemeDocument {
    pub version: u32,
    pub seed_m: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub arcs: Vec<ArcDocument>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub surgeries: Vec<SurgeryDocument>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArcDocument {
    pub splice: usize,
    pub entry_side: SideName,
    #[serde(default)]
    pub interior: Vec<PositionDocument>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PositionDocument {
    pub gap: usize,
    pub rank: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SurgeryDocument {
    pub crossing: usize,
    pub kind: KindName,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SideName {
    East,
    West,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum KindName {
    SingleSwNe,
    SingleNwSe,
    Double,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrigamiDocument {
    pub version: u32,
    pub squares: usize,
    /// Image array: the square glued to the right side of each square.
    pub right: Vec<usize>,
    /// Image array: the square glued on top of each square.
    pub top: Vec<usize>,
}

impl From<Side> for SideName {
    fn from(side: Side) -> Self {
        match side {
            Side::East => SideName::East,
            Side::West => SideName::West,
        }
    }
}

impl From<SideName> for Side {
    fn from(side: SideName) -> Self {
        match side {
            SideName::East => Side::East,
            SideName::West => Side::West,
        }
    }
}

impl From<SurgeryKind> for KindName {
    fn from(kind: SurgeryKind) -> Self {
        match kind {
            SurgeryKind::SingleSwNe => KindName::SingleSwNe,
            SurgeryKind::SingleNwSe => KindName::SingleNwSe,
            SurgeryKind::Double => KindName::Double,
        }
    }
}

impl From<KindName> for SurgeryKind {
    fn from(kind: KindName) -> Self {
        match kind {
            KindName::SingleSwNe => SurgeryKind::SingleSwNe,
            KindName::SingleNwSe => SurgeryKind::SingleNwSe,
            KindName::Double => SurgeryKind::Double,
        }
    }
}

fn check_version(kind: &str, version: u32) -> Result<(), CliError> {
    if version != FORMAT_VERSION {
        return Err(CliError::usage(format!(
            "unsupported {kind} document version {version} (expected {FORMAT_VERSION})"
        )));
    }
    Ok(())
}

fn permutation(name: &str, images: &[usize], n: usize) -> Result<Permutation, CliError> {
    if images.len() != n {
        return Err(CliError::usage(format!(
            "{name} has {} entries but n = {n}",
            images.len()
        )));
    }
    Permutation::from_images(images.to_vec()).map_err(|e| CliError::usage(format!("{name}: {e}")))
}

pub fn parse<T: DeserializeOwned>(kind: &str, text: &str) -> Result<T, CliError> {
    serde_json::from_str(text)
        .map_err(|e| CliError::usage(format!("cannot parse {kind} document: {e}")))
}

impl PairDocument {
    /// A document for `pair` with explicit all-positive signs.
    pub fn from_pair(pair: &CurvePair) -> Self {
        PairDocument {
            version: FORMAT_VERSION,
            n: pair.n(),
            alpha_order: pair.alpha().images().to_vec(),
            beta_order: pair.beta().images().to_vec(),
            signs: Some(vec![1; pair.n()]),
            punctures: pair.punctures().clone(),
            provenance: None,
        }
    }

    pub fn with_provenance(mut self, construction: Option<&str>, scheme: SchemeDocument) -> Self {
        self.provenance = Some(Provenance {
            construction: construction.map(str::to_owned),
            scheme,
        });
        self
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        let doc: PairDocument = parse("pair", text)?;
        check_version("pair", doc.version)?;
        Ok(doc)
    }

    /// The curve pair with punctures attached. Signs are not applied here;
    /// they are checked separately.
    pub fn to_pair(&self) -> Result<CurvePair, CliError> {
        check_version("pair", self.version)?;
        let alpha = permutation("alpha_order", &self.alpha_order, self.n)?;
        let beta = permutation("beta_order", &self.beta_order, self.n)?;
        if let Some(signs) = &self.signs {
            if signs.len() != self.n {
                return Err(CliError::usage(format!(
                    "signs has {} entries but n = {}",
                    signs.len(),
                    self.n
                )));
            }
        }
        Ok(CurvePair::new(alpha, beta)?.with_punctures(self.punctures.clone())?)
    }

    pub fn to_json(&self) -> String {
        json::to_string(self)
    }
}

impl SchemeDocument {
    pub fn from_point_scheme(scheme: &PointScheme) -> Self {
        SchemeDocument {
            version: FORMAT_VERSION,
            seed_m: scheme.seed_m(),
            arcs: Vec::new(),
            surgeries: scheme
                .surgeries()
                .iter()
                .map(|s| SurgeryDocument {
                    crossing: s.crossing,
                    kind: s.kind.into(),
                })
                .collect(),
        }
    }

    pub fn from_scheme(scheme: &Scheme) -> Self {
        SchemeDocument {
            version: FORMAT_VERSION,
            seed_m: scheme.seed_m(),
            arcs: scheme
                .arcs()
                .iter()
                .map(|arc| ArcDocument {
                    splice: arc.splice,
                    entry_side: arc.entry_side.into(),
                    interior: arc
                        .interior
                        .iter()
                        .map(|p| PositionDocument {
                            gap: p.gap,
                            rank: p.rank,
                        })
                        .collect(),
                })
                .collect(),
            surgeries: Vec::new(),
        }
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        let doc: SchemeDocument = parse("scheme", text)?;
        check_version("scheme", doc.version)?;
        Ok(doc)
    }

    /// General arcs first, then one point arc per listed surgery.
    pub fn to_scheme(&self) -> Result<Scheme, CliError> {
        check_version("scheme", self.version)?;
        let mut arcs: Vec<GammaArc> = self
            .arcs
            .iter()
            .map(|a| {
                GammaArc::new(
                    a.splice,
                    a.entry_side.into(),
                    a.interior
                        .iter()
                        .map(|p| CrossingPosition {
                            gap: p.gap,
                            rank: p.rank,
                        })
                        .collect(),
                )
            })
            .collect();
        for s in &self.surgeries {
            if s.crossing >= self.seed_m {
                return Err(CliError::failure(format!(
                    "invalid scheme: surgery at crossing {} outside the {}-crossing seed",
                    s.crossing, self.seed_m
                )));
            }
            arcs.push(GammaArc::point(s.crossing, s.kind.into(), self.seed_m));
        }
        Scheme::new(self.seed_m, arcs).map_err(|e| CliError::failure(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        json::to_string(self)
    }
}

impl OrigamiDocument {
    pub fn from_origami(origami: &Origami) -> Self {
        OrigamiDocument {
            version: FORMAT_VERSION,
            squares: origami.squares(),
            right: origami.right().images().to_vec(),
            top: origami.top().images().to_vec(),
        }
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        let doc: OrigamiDocument = parse("origami", text)?;
        check_version("origami", doc.version)?;
        Ok(doc)
    }

    pub fn to_origami(&self) -> Result<Origami, CliError> {
        check_version("origami", self.version)?;
        let right = permutation("right", &self.right, self.squares)?;
        let top = permutation("top", &self.top, self.squares)?;
        Ok(Origami::new(right, top)?)
    }

    pub fn to_json(&self) -> String {
        json::to_string(self)
    }
}

/// Reads a file, or standard input for `-`.
pub fn read_input(path: &Path) -> Result<String, CliError> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| CliError::usage(format!("cannot read standard input: {e}")))?;
        return Ok(text);
    }
    fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))
}

/// Writes a file, or standard output for `-`.
pub fn write_output(path: &Path, text: &str) -> Result<(), CliError> {
    if path.as_os_str() == "-" {
        let mut stdout = io::stdout().lock();
        return stdout
            .write_all(text.as_bytes())
            .and_then(|_| stdout.flush())
            .map_err(|e| CliError::failure(format!("cannot write standard output: {e}")));
    }
    fs::write(path, text)
        .map_err(|e| CliError::failure(format!("cannot write {}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use fillpair_core::{minimal_closed, minimal_punctured};

    #[test]
    fn pair_round_trip() {
        let pair = minimal_punctured(3, 2).unwrap();
        let doc = PairDocument::from_pair(&pair);
        let text = doc.to_json();
        let back = PairDocument::parse(&text).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.to_json(), text);
        assert_eq!(back.to_pair().unwrap(), pair);
    }

    #[test]
    fn rejects_other_versions_and_unknown_fields() {
        let mut doc = PairDocument::from_pair(&minimal_closed(3).unwrap());
        doc.version = 7;
        assert!(matches!(
            PairDocument::parse(&doc.to_json()),
            Err(CliError::Usage(_))
        ));
        let text =
            "{\"version\": 1, \"n\": 1, \"alpha_order\": [0], \"beta_order\": [0], \"extra\": 0}";
        assert!(matches!(PairDocument::parse(text), Err(CliError::Usage(_))));
    }

    #[test]
    fn split_curve_is_a_semantic_failure() {
        let text = "{\"version\": 1, \"n\": 2, \"alpha_order\": [0, 1], \"beta_order\": [1, 0]}";
        let doc = PairDocument::parse(text).unwrap();
        assert!(matches!(doc.to_pair(), Err(CliError::Failure(_))));
        let bad = "{\"version\": 1, \"n\": 2, \"alpha_order\": [0, 0], \"beta_order\": [1, 0]}";
        let doc = PairDocument::parse(bad).unwrap();
        assert!(matches!(doc.to_pair(), Err(CliError::Usage(_))));
    }

    #[test]
    fn scheme_kinds_use_snake_case() {
        let text = "{\"version\": 1, \"seed_m\": 3, \"surgeries\": [{\"crossing\": 1, \"kind\": \"single_sw_ne\"}]}";
        let doc = SchemeDocument::parse(text).unwrap();
        assert_eq!(doc.to_scheme().unwrap().handle_count(), 1);
        let dup = "{\"version\": 1, \"seed_m\": 3, \"surgeries\": [{\"crossing\": 1, \"kind\": \"double\"}, {\"crossing\": 1, \"kind\": \"single_nw_se\"}]}";
        let err = SchemeDocument::parse(dup).unwrap().to_scheme().unwrap_err();
        assert!(matches!(err, CliError::Failure(ref m) if m.contains("splice")));
    }
}
