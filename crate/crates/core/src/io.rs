//! JSON file schemas: divides, arrangements, shadows, cutting systems and
//! presentations. All documents carry a `schema` version tag; rationals are
//! written as `[numerator, denominator]` integer pairs and gleams as doubled
//! integers.

use serde::{Deserialize, Serialize};

use crate::builders::{
    rational, Divide, Layout, LineArrangement, PolylineComponent, Rational,
};
use crate::cutting::CuttingSystem;
use crate::error::Error;
use crate::group::{Letter, Presentation, Word};
use crate::planar::{build_disk_map, DartId, EdgeId, RegionId};
use crate::shadow::{
    GleamFunction, Label, LinkDiagramPresentation, OverPair, ShadowedPolyhedron,
};

pub const DIVIDE_SCHEMA: &str = "divide/1";
pub const ARRANGEMENT_SCHEMA: &str = "arrangement/1";
pub const SHADOW_SCHEMA: &str = "shadow/1";
pub const CUTTING_SCHEMA: &str = "cutting/1";
pub const PRESENTATION_SCHEMA: &str = "presentation/1";

fn check_schema(found: &str, expected: &str) -> Result<(), Error> {
    if found == expected {
        Ok(())
    } else {
        Err(Error::Schema(format!(
            "expected schema {expected}, found {found}"
        )))
    }
}

type RatPair = [i64; 2];

fn to_rational(p: RatPair) -> Result<Rational, Error> {
    if p[1] == 0 {
        return Err(Error::Schema("rational with zero denominator".into()));
    }
    Ok(rational(p[0], p[1]))
}

/// Divide input: polyline components with rational vertices.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DivideFile {
    pub schema: String,
    pub components: Vec<DivideComponentEntry>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DivideComponentEntry {
    pub closed: bool,
    /// Points as [[xn, xd], [yn, yd]].
    pub points: Vec<[RatPair; 2]>,
}

pub fn parse_divide(text: &str) -> Result<Divide, Error> {
    let file: DivideFile =
        serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))?;
    check_schema(&file.schema, DIVIDE_SCHEMA)?;
    let mut components = Vec::new();
    for entry in &file.components {
        let mut points = Vec::new();
        for p in &entry.points {
            points.push((to_rational(p[0])?, to_rational(p[1])?));
        }
        components.push(PolylineComponent::from_rationals(entry.closed, points));
    }
    crate::builders::ingest_polyline_divide(&components)
}

/// Arrangement input: coefficient triples of a*u + b*v + c = 0.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ArrangementFile {
    pub schema: String,
    pub lines: Vec<[RatPair; 3]>,
}

pub fn parse_arrangement(text: &str) -> Result<LineArrangement, Error> {
    let file: ArrangementFile =
        serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))?;
    check_schema(&file.schema, ARRANGEMENT_SCHEMA)?;
    let mut lines = Vec::new();
    for l in &file.lines {
        lines.push((to_rational(l[0])?, to_rational(l[1])?, to_rational(l[2])?));
    }
    LineArrangement::from_rationals(lines)
}

/// Shadow document: the crossing table with decorations.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ShadowFile {
    pub schema: String,
    /// Counterclockwise darts per crossing.
    pub crossings: Vec<Vec<u32>>,
    pub twins: Vec<u32>,
    pub outer_mark: u32,
    /// 0: the over pair is rotation slots 0 and 2; 1: slots 1 and 3.
    pub over: Vec<u8>,
    /// One dart per component, traversed forward.
    pub orientation: Vec<u32>,
    /// Doubled gleams per internal region, in region-id order.
    pub twice_gleams: Vec<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<Label>>,
    /// Crossing positions when the shadow was built from geometry.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub layout: Option<Vec<[f64; 2]>>,
}

pub fn shadow_to_file(shadow: &ShadowedPolyhedron, layout: Option<&Layout>) -> ShadowFile {
    let map = shadow.map();
    let (crossings, twins, outer_mark) = map.to_crossing_table();
    let over = shadow
        .diagram
        .over()
        .iter()
        .map(|o| match o {
            OverPair::Slots02 => 0,
            OverPair::Slots13 => 1,
        })
        .collect();
    let orientation = shadow
        .diagram
        .orientation_seeds()
        .iter()
        .map(|d| d.0)
        .collect();
    let twice_gleams = map
        .internal_regions()
        .map(|r| shadow.gleams.twice_gleam(r).unwrap())
        .collect();
    ShadowFile {
        schema: SHADOW_SCHEMA.into(),
        crossings,
        twins,
        outer_mark,
        over,
        orientation,
        twice_gleams,
        labels: shadow.labels().map(|l| l.to_vec()),
        layout: layout.map(|l| l.crossings.iter().map(|&(x, y)| [x, y]).collect()),
    }
}

pub fn shadow_from_file(file: &ShadowFile) -> Result<(ShadowedPolyhedron, Option<Layout>), Error> {
    check_schema(&file.schema, SHADOW_SCHEMA)?;
    let map = build_disk_map(&file.crossings, &file.twins, file.outer_mark)?;
    if file.over.len() != map.crossing_count() {
        return Err(Error::Schema("over/under list length mismatch".into()));
    }
    let over = file
        .over
        .iter()
        .map(|&o| match o {
            0 => Ok(OverPair::Slots02),
            1 => Ok(OverPair::Slots13),
            other => Err(Error::Schema(format!("over flag {other} is not 0 or 1"))),
        })
        .collect::<Result<Vec<_>, _>>()?;
    let seeds: Vec<DartId> = file.orientation.iter().map(|&d| DartId(d)).collect();
    let diagram = LinkDiagramPresentation::new(map, over, &seeds)?;
    let gleams = GleamFunction::from_internal_order(diagram.map(), &file.twice_gleams)?;
    let shadow = ShadowedPolyhedron::new(diagram, gleams, file.labels.clone())?;
    let layout = file.layout.as_ref().map(|l| Layout {
        crossings: l.iter().map(|p| (p[0], p[1])).collect(),
    });
    Ok((shadow, layout))
}

pub fn parse_shadow(text: &str) -> Result<(ShadowedPolyhedron, Option<Layout>), Error> {
    let file: ShadowFile =
        serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))?;
    shadow_from_file(&file)
}

pub fn shadow_to_string(shadow: &ShadowedPolyhedron, layout: Option<&Layout>) -> String {
    serde_json::to_string_pretty(&shadow_to_file(shadow, layout)).expect("shadow serializes")
}

/// Cutting system document: (region, crossed edge) links.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CuttingFile {
    pub schema: String,
    pub links: Vec<[u32; 2]>,
}

pub fn cutting_to_string(cs: &CuttingSystem) -> String {
    let file = CuttingFile {
        schema: CUTTING_SCHEMA.into(),
        links: cs.links().map(|(r, e)| [r.0, e.0]).collect(),
    };
    serde_json::to_string_pretty(&file).expect("cutting system serializes")
}

pub fn parse_cutting(
    text: &str,
    map: &crate::planar::DiskMap,
) -> Result<CuttingSystem, Error> {
    let file: CuttingFile =
        serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))?;
    check_schema(&file.schema, CUTTING_SCHEMA)?;
    let links: Vec<(RegionId, EdgeId)> = file
        .links
        .iter()
        .map(|&[r, e]| (RegionId(r), EdgeId(e)))
        .collect();
    let cs = CuttingSystem::from_links(map, &links)?;
    crate::cutting::validate_cut(map, &cs)?;
    Ok(cs)
}

/// Presentation document: named generators, relators as power runs.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PresentationFile {
    pub schema: String,
    pub generators: Vec<String>,
    /// Each relator is a list of [generator name, exponent] runs.
    pub relators: Vec<Vec<(String, i64)>>,
}

pub fn presentation_to_file(pres: &Presentation) -> PresentationFile {
    let relators = pres
        .relators
        .iter()
        .map(|w| {
            let mut runs: Vec<(String, i64)> = Vec::new();
            for l in w.letters() {
                let name = pres.generators[l.gen as usize].clone();
                let e = if l.inv { -1 } else { 1 };
                match runs.last_mut() {
                    Some((last, exp)) if *last == name && (*exp > 0) == (e > 0) => *exp += e,
                    _ => runs.push((name, e)),
                }
            }
            runs
        })
        .collect();
    PresentationFile {
        schema: PRESENTATION_SCHEMA.into(),
        generators: pres.generators.clone(),
        relators,
    }
}

pub fn presentation_from_file(file: &PresentationFile) -> Result<Presentation, Error> {
    check_schema(&file.schema, PRESENTATION_SCHEMA)?;
    let index: std::collections::BTreeMap<&str, u32> = file
        .generators
        .iter()
        .enumerate()
        .map(|(i, g)| (g.as_str(), i as u32))
        .collect();
    let mut relators = Vec::new();
    for runs in &file.relators {
        let mut w = Word::empty();
        for (name, exp) in runs {
            let gen = *index.get(name.as_str()).ok_or_else(|| Error::UnknownGenerator {
                gen: name.clone(),
            })?;
            for _ in 0..exp.unsigned_abs() {
                w.push(Letter::new(gen, *exp < 0));
            }
        }
        relators.push(w);
    }
    Presentation::new(file.generators.clone(), relators)
}

pub fn parse_presentation(text: &str) -> Result<Presentation, Error> {
    let file: PresentationFile =
        serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))?;
    presentation_from_file(&file)
}

pub fn presentation_to_string(pres: &Presentation) -> String {
    serde_json::to_string_pretty(&presentation_to_file(pres)).expect("presentation serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    #[test]
    fn shadow_round_trip() {
        for shadow in [
            samples::fig15_shadow(),
            samples::fig16_shadow(),
            samples::fig18_shadow(),
        ] {
            let text = shadow_to_string(&shadow, None);
            let (back, layout) = parse_shadow(&text).unwrap();
            assert!(layout.is_none());
            assert_eq!(&back, &shadow);
            // Serialize-parse-serialize is stable.
            assert_eq!(shadow_to_string(&back, None), text);
        }
    }

    #[test]
    fn presentation_round_trip() {
        let p = Presentation::parse(&["x", "y"], &["x y x y^-1 x^-1 y^-1", "x^3 y^-2"]).unwrap();
        let text = presentation_to_string(&p);
        let back = parse_presentation(&text).unwrap();
        assert_eq!(back, p);
        assert_eq!(presentation_to_string(&back), text);
    }

    #[test]
    fn cutting_round_trip() {
        let map = samples::fig15_curve();
        let cs = samples::fig15_path_cut(&map);
        let text = cutting_to_string(&cs);
        let back = parse_cutting(&text, &map).unwrap();
        assert_eq!(back, cs);
    }

    #[test]
    fn divide_file_parses() {
        let text = r#"{
            "schema": "divide/1",
            "components": [
                {"closed": false, "points": [[[-2,1],[0,1]], [[2,1],[0,1]]]},
                {"closed": false, "points": [[[0,1],[-2,1]], [[0,1],[2,1]]]}
            ]
        }"#;
        let divide = parse_divide(text).unwrap();
        assert_eq!(divide.double_point_count(), 1);
    }

    #[test]
    fn schema_mismatch_rejected() {
        let err = parse_divide(r#"{"schema": "divide/9", "components": []}"#).unwrap_err();
        assert!(matches!(err, Error::Schema(_)));
    }
}
