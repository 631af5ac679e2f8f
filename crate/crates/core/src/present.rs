//! The presentation engine: fundamental groups of subpolyhedron complements
//! in the 4-ball, the Wirtinger presentation of the boundary link, and the
//! comparison between the two when gleams equal corner sums.
//!
//! For a shadow with selection Y and cutting system A, the group is
//!
//! ```text
//! < x_strands, y_pieces | s-relators, t-relators >
//! ```
//!
//! with one generator per strand of the diagram cut along A, one generator
//! per piece of each selected region, an s-relator `y_r x y_l^-1` per arc of
//! the curve minus the cutting points (meridians of unselected regions are
//! the empty word), and a t-relator `g x_f g^-1 x_b^-1` per cutting point,
//! where the conjugating word `g` multiplies the forward-piece meridians of
//! the subtree regions, counterclockwise first-visit order, rightmost
//! first, with integer exponents gleam minus corner sum.

use std::collections::BTreeMap;

use crate::cutting::{
    analyze, reduce_system, strand_classes, Atom, CutAnalysis, CuttingSystem, Half, Piece,
    StrandId,
};
use crate::error::Error;
use crate::group::{Fingerprint, Presentation, Word};
use crate::planar::{CrossingId, DartId, RegionId};
use crate::shadow::{
    compute_c, crossing_sign, select_all_internal, validate_shadow, LinkDiagramPresentation,
    ShadowedPolyhedron, SubSelection,
};

/// A presentation together with the generator bookkeeping.
#[derive(Debug, Clone)]
pub struct PresentationBuild {
    pub presentation: Presentation,
    pub strand_generator: BTreeMap<StrandId, u32>,
    pub piece_generator: BTreeMap<Piece, u32>,
    /// Conjugating word of the t-relator at each cutting point, keyed by the
    /// cutting point's region.
    pub gammas: BTreeMap<RegionId, Word>,
}

fn piece_word(
    selection: &SubSelection,
    piece_generator: &BTreeMap<Piece, u32>,
    piece: Piece,
) -> Word {
    if selection.contains(piece.region) {
        Word::letter(piece_generator[&piece], false)
    } else {
        Word::empty()
    }
}

fn gamma_for(
    shadow: &ShadowedPolyhedron,
    selection: &SubSelection,
    analysis: &CutAnalysis,
    piece_generator: &BTreeMap<Piece, u32>,
    twice_c: &BTreeMap<RegionId, i64>,
    region: RegionId,
) -> Result<Word, Error> {
    let mut word = Word::empty();
    let order = analysis.subtree_regions_ccw(region);
    for &r in order.iter().rev() {
        if !selection.contains(r) {
            continue;
        }
        let tg = shadow.gleams.twice_gleam(r)?;
        let tc = twice_c[&r];
        if (tg - tc).rem_euclid(2) != 0 {
            return Err(Error::HalfIntegerExponent {
                region: r.0,
                twice_gleam: tg,
                twice_c: tc,
            });
        }
        let exponent = (tg - tc) / 2;
        let piece = analysis
            .cut_point(r)
            .expect("subtree regions carry cutting points")
            .forward_piece;
        word.extend(&Word::power(piece_generator[&piece], exponent));
    }
    Ok(word)
}

/// The conjugating word at the cutting point of `region`, in the generators
/// of [`present_full`] for the same inputs.
pub fn gamma_word(
    shadow: &ShadowedPolyhedron,
    selection: &SubSelection,
    cs: &CuttingSystem,
    region: RegionId,
) -> Result<Word, Error> {
    let build = present_full(shadow, selection, cs)?;
    build
        .gammas
        .get(&region)
        .cloned()
        .ok_or(Error::RegionWithoutVertex { region: region.0 })
}

/// Presentation of the fundamental group of the complement of the selected
/// subpolyhedron, using the full cutting system.
pub fn present(
    shadow: &ShadowedPolyhedron,
    selection: &SubSelection,
    cs: &CuttingSystem,
) -> Result<Presentation, Error> {
    Ok(present_full(shadow, selection, cs)?.presentation)
}

/// As [`present`], with generator tables and conjugating words exposed.
pub fn present_full(
    shadow: &ShadowedPolyhedron,
    selection: &SubSelection,
    cs: &CuttingSystem,
) -> Result<PresentationBuild, Error> {
    validate_shadow(shadow, selection)?;
    let analysis = analyze(&shadow.diagram, cs)?;
    build(shadow, selection, &analysis)
}

/// Presentation over a reduced system of cutting trees. Requires a
/// selection staying away from the disk boundary; the input system is
/// reduced if it is not already.
pub fn present_reduced(
    shadow: &ShadowedPolyhedron,
    selection: &SubSelection,
    cs: &CuttingSystem,
) -> Result<Presentation, Error> {
    if selection.contains(shadow.map().outer_region()) {
        return Err(Error::SelectionTouchesBoundary);
    }
    validate_shadow(shadow, selection)?;
    let reduced = reduce_system(shadow.map(), cs);
    let analysis = analyze(&shadow.diagram, &reduced)?;
    Ok(build(shadow, selection, &analysis)?.presentation)
}

fn build(
    shadow: &ShadowedPolyhedron,
    selection: &SubSelection,
    analysis: &CutAnalysis,
) -> Result<PresentationBuild, Error> {
    let map = shadow.map();
    let diagram = &shadow.diagram;
    let twice_c = compute_c(diagram);

    let mut generators = Vec::new();
    let mut strand_generator = BTreeMap::new();
    for strand in analysis.strands() {
        strand_generator.insert(strand.id, generators.len() as u32);
        generators.push(format!("x{}", strand.id));
    }
    let mut piece_generator = BTreeMap::new();
    for piece in analysis.pieces() {
        if selection.contains(piece.region) {
            piece_generator.insert(piece, generators.len() as u32);
            generators.push(format!("y{}.{}", piece.region, piece.index));
        }
    }

    let mut relators = Vec::new();

    // One s-relator y_r x y_l^-1 per arc of the curve minus the cutting
    // points, deduplicated after free reduction.
    let push_s = |left: Piece, right: Piece, strand: StrandId, relators: &mut Vec<Word>| {
        let mut w = piece_word(selection, &piece_generator, right);
        w.push(crate::group::Letter::new(strand_generator[&strand], false));
        w.extend(&piece_word(selection, &piece_generator, left).inverse());
        relators.push(w);
    };
    for e in 0..map.edge_count() as u32 {
        let e = crate::planar::EdgeId(e);
        let f = diagram.forward(e);
        let t = map.twin(f);
        let left_region = map.left_of(f);
        let right_region = map.left_of(t);
        if !analysis.is_crossed(e) {
            let left = Piece {
                region: left_region,
                index: analysis.piece_left_of_whole(f),
            };
            let right = Piece {
                region: right_region,
                index: analysis.piece_left_of_whole(t),
            };
            push_s(
                left,
                right,
                analysis.strand_of(Atom {
                    edge: e,
                    half: Half::Whole,
                }),
                &mut relators,
            );
        } else {
            // Tail half: before the cutting point along the forward dart.
            let left = Piece {
                region: left_region,
                index: analysis.piece_left_of_first_half(f),
            };
            let right = Piece {
                region: right_region,
                index: analysis.piece_left_of_second_half(t),
            };
            push_s(
                left,
                right,
                analysis.strand_of(Atom {
                    edge: e,
                    half: Half::Tail,
                }),
                &mut relators,
            );
            // Head half.
            let left = Piece {
                region: left_region,
                index: analysis.piece_left_of_second_half(f),
            };
            let right = Piece {
                region: right_region,
                index: analysis.piece_left_of_first_half(t),
            };
            push_s(
                left,
                right,
                analysis.strand_of(Atom {
                    edge: e,
                    half: Half::Head,
                }),
                &mut relators,
            );
        }
    }

    // One t-relator per cutting point.
    let mut gammas = BTreeMap::new();
    for cp in analysis.cut_points() {
        let gamma = gamma_for(
            shadow,
            selection,
            analysis,
            &piece_generator,
            &twice_c,
            cp.region,
        )?;
        let x_f = Word::letter(strand_generator[&analysis.strand_of(cp.forward_atom)], false);
        let x_b = Word::letter(strand_generator[&analysis.strand_of(cp.backward_atom)], false);
        let t = gamma
            .clone()
            .concat(&x_f)
            .concat(&gamma.inverse())
            .concat(&x_b.inverse());
        relators.push(t);
        gammas.insert(cp.region, gamma);
    }

    let mut seen = std::collections::BTreeSet::new();
    let relators: Vec<Word> = relators
        .into_iter()
        .filter(|w| !w.is_empty() && seen.insert(w.clone()))
        .collect();

    Ok(PresentationBuild {
        presentation: Presentation::new(generators, relators)?,
        strand_generator,
        piece_generator,
        gammas,
    })
}

/// Meridians of the selected region pieces expressed as words in the strand
/// generators of [`present_full`], obtained by propagating `y_l = y_r x`
/// across arcs from the unselected regions (whose meridians are trivial).
/// Fails when every region is selected, since then no meridian is pinned.
pub fn meridian_words(
    shadow: &ShadowedPolyhedron,
    selection: &SubSelection,
    cs: &CuttingSystem,
) -> Result<BTreeMap<Piece, Word>, Error> {
    let build = present_full(shadow, selection, cs)?;
    let analysis = analyze(&shadow.diagram, cs)?;
    let map = shadow.map();
    let diagram = &shadow.diagram;

    let mut words: BTreeMap<Piece, Word> = BTreeMap::new();
    for piece in analysis.pieces() {
        if !selection.contains(piece.region) {
            words.insert(piece, Word::empty());
        }
    }
    if words.is_empty() {
        return Err(Error::SelectionTouchesBoundary);
    }

    // Arcs relate the meridians of their two side pieces; walk until all
    // pieces are expressed.
    #[derive(Clone, Copy)]
    struct Side {
        left: Piece,
        right: Piece,
        strand: StrandId,
    }
    let mut sides = Vec::new();
    for e in 0..map.edge_count() as u32 {
        let e = crate::planar::EdgeId(e);
        let f = diagram.forward(e);
        let t = map.twin(f);
        if !analysis.is_crossed(e) {
            sides.push(Side {
                left: Piece {
                    region: map.left_of(f),
                    index: analysis.piece_left_of_whole(f),
                },
                right: Piece {
                    region: map.left_of(t),
                    index: analysis.piece_left_of_whole(t),
                },
                strand: analysis.strand_of(Atom {
                    edge: e,
                    half: Half::Whole,
                }),
            });
        } else {
            sides.push(Side {
                left: Piece {
                    region: map.left_of(f),
                    index: analysis.piece_left_of_first_half(f),
                },
                right: Piece {
                    region: map.left_of(t),
                    index: analysis.piece_left_of_second_half(t),
                },
                strand: analysis.strand_of(Atom {
                    edge: e,
                    half: Half::Tail,
                }),
            });
            sides.push(Side {
                left: Piece {
                    region: map.left_of(f),
                    index: analysis.piece_left_of_second_half(f),
                },
                right: Piece {
                    region: map.left_of(t),
                    index: analysis.piece_left_of_first_half(t),
                },
                strand: analysis.strand_of(Atom {
                    edge: e,
                    half: Half::Head,
                }),
            });
        }
    }
    let total = analysis.pieces().len();
    while words.len() < total {
        let mut progressed = false;
        for side in &sides {
            let x = Word::letter(build.strand_generator[&side.strand], false);
            if words.contains_key(&side.left) && !words.contains_key(&side.right) {
                // y_r = y_l x^-1
                let w = words[&side.left].clone().concat(&x.inverse());
                words.insert(side.right, w);
                progressed = true;
            } else if words.contains_key(&side.right) && !words.contains_key(&side.left) {
                // y_l = y_r x
                let w = words[&side.right].clone().concat(&x);
                words.insert(side.left, w);
                progressed = true;
            }
        }
        assert!(progressed, "piece adjacency across arcs is connected");
    }
    words.retain(|p, _| selection.contains(p.region));
    Ok(words)
}

/// Classical Wirtinger presentation of the link presented by the oriented
/// diagram: one generator per arc, one relator per crossing.
pub fn wirtinger(diagram: &LinkDiagramPresentation) -> Result<Presentation, Error> {
    let map = diagram.map();
    let (arcs, arc_of) = strand_classes(diagram, &Default::default());
    let generators: Vec<String> = arcs.iter().map(|a| format!("a{}", a.id)).collect();

    let arc_at = |d: DartId| -> u32 {
        let atom = Atom {
            edge: map.edge_of(d),
            half: Half::Whole,
        };
        arc_of[&atom].0
    };

    let mut relators = Vec::new();
    for v in 0..map.crossing_count() as u32 {
        let v = CrossingId(v);
        let darts = map.crossing_darts(v);
        let over_darts: Vec<DartId> = darts
            .iter()
            .copied()
            .filter(|&d| diagram.is_over(d))
            .collect();
        let under_darts: Vec<DartId> = darts
            .iter()
            .copied()
            .filter(|&d| !diagram.is_over(d))
            .collect();
        let over = arc_at(over_darts[0]);
        debug_assert_eq!(over, arc_at(over_darts[1]));
        let (u_out, u_in) = if diagram.is_forward(under_darts[0]) {
            (under_darts[0], under_darts[1])
        } else {
            (under_darts[1], under_darts[0])
        };
        let a_in = Word::letter(arc_at(u_in), false);
        let a_out = Word::letter(arc_at(u_out), false);
        let sign = crossing_sign(diagram, v);
        // out = over^sign . in . over^-sign
        let conj = Word::power(over, sign as i64);
        let relator = conj
            .clone()
            .concat(&a_in)
            .concat(&conj.inverse())
            .concat(&a_out.inverse());
        relators.push(relator);
    }
    let mut seen = std::collections::BTreeSet::new();
    let relators = relators
        .into_iter()
        .filter(|w| !w.is_empty() && seen.insert(w.clone()))
        .collect();
    Presentation::new(generators, relators)
}

/// Outcome of the gleam-equals-corner-sum comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Thm41Report {
    /// Some internal region has gleam different from its corner sum.
    NotApplicable { region: RegionId },
    Match {
        /// Wirtinger arc generator -> strand generator, the comparison map
        /// on generators.
        generator_map: Vec<(String, String)>,
        fingerprint: Fingerprint,
    },
    Mismatch {
        generator_map: Vec<(String, String)>,
        wirtinger: Fingerprint,
        presented: Fingerprint,
    },
}

/// When every internal region satisfies gleam = corner sum, the complement
/// of the subpolyhedron "everything but the outer region" has the same
/// group as the boundary link; compare the two presentations by
/// fingerprint. Arcs map to their strand meridian; arcs crossing the
/// cutting system map to the forward strand at their first cutting point.
pub fn check_theorem_41(
    shadow: &ShadowedPolyhedron,
    cs: &CuttingSystem,
) -> Result<Thm41Report, Error> {
    let map = shadow.map();
    let twice_c = compute_c(&shadow.diagram);
    for r in map.internal_regions() {
        if shadow.gleams.twice_gleam(r)? != twice_c[&r] {
            return Ok(Thm41Report::NotApplicable { region: r });
        }
    }

    let selection = select_all_internal(map);
    let build = present_full(shadow, &selection, cs)?;
    let analysis = analyze(&shadow.diagram, cs)?;
    let wirt = wirtinger(&shadow.diagram)?;

    // The generator comparison map.
    let (arcs, _) = strand_classes(&shadow.diagram, &Default::default());
    let mut generator_map = Vec::new();
    for arc in &arcs {
        let image = if let Some(whole) = arc
            .atoms
            .iter()
            .find(|a| !analysis.is_crossed(a.edge))
        {
            analysis.strand_of(*whole)
        } else {
            // Every edge of the arc is cut; use the forward strand at the
            // first cutting point along it.
            let cut = arc
                .atoms
                .iter()
                .min_by_key(|a| a.edge)
                .expect("arcs are nonempty");
            let cp = analysis
                .cut_points()
                .find(|cp| cp.edge == cut.edge)
                .expect("cut edges carry cutting points");
            analysis.strand_of(cp.forward_atom)
        };
        generator_map.push((format!("a{}", arc.id), format!("x{image}")));
    }

    let presented = crate::group::standard_fingerprint(&build.presentation)?;
    let wirt_fp = crate::group::standard_fingerprint(&wirt)?;
    if presented == wirt_fp {
        Ok(Thm41Report::Match {
            generator_map,
            fingerprint: presented,
        })
    } else {
        Ok(Thm41Report::Mismatch {
            generator_map,
            wirtinger: wirt_fp,
            presented,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cutting::auto_cut;
    use crate::group::standard_fingerprint;
    use crate::samples;
    use crate::shadow::{select_regions, SelectionPreset, ShadowedPolyhedron};

    fn fp_of(spec_gens: &[&str], spec_rels: &[&str]) -> Fingerprint {
        let p = Presentation::parse(spec_gens, spec_rels).unwrap();
        standard_fingerprint(&p).unwrap()
    }

    #[test]
    fn fig15_yabc_is_rank_two_abelian() {
        let shadow = samples::fig15_shadow();
        let (yabc, _) = select_regions(&shadow, &SelectionPreset::Yabc).unwrap();
        let cs = samples::fig15_path_cut(shadow.map());
        let p = present(&shadow, &yabc, &cs).unwrap();
        assert_eq!(
            standard_fingerprint(&p).unwrap(),
            fp_of(&["x", "y"], &["x y x^-1 y^-1"])
        );
    }

    #[test]
    fn fig15_yac_is_z() {
        let shadow = samples::fig15_shadow();
        let (yac, _) = select_regions(&shadow, &SelectionPreset::Yac).unwrap();
        let cs = samples::fig15_path_cut(shadow.map());
        let p = present(&shadow, &yac, &cs).unwrap();
        assert_eq!(standard_fingerprint(&p).unwrap(), fp_of(&["x"], &[]));
    }

    #[test]
    fn fig15_gamma_at_the_square() {
        // The square is a leaf of the worked cutting system, so its
        // conjugating word is the single forward-piece meridian with
        // exponent gl - c = -1 - (-2) = +1.
        let shadow = samples::fig15_shadow();
        let (yabc, _) = select_regions(&shadow, &SelectionPreset::Yabc).unwrap();
        let cs = samples::fig15_path_cut(shadow.map());
        let build = present_full(&shadow, &yabc, &cs).unwrap();
        let square = RegionId(2);
        let gamma = &build.gammas[&square];
        assert_eq!(gamma.len(), 1);
        let piece = Piece {
            region: square,
            index: 0,
        };
        assert_eq!(
            gamma.letters()[0],
            crate::group::Letter::new(build.piece_generator[&piece], false)
        );

        // The right digon's subtree is [digon, square]: rightmost factor is
        // the digon's own forward piece with exponent (0 - 1) = -1, and the
        // square contributes exponent +1 on the left.
        let digon = RegionId(3);
        let gamma = &build.gammas[&digon];
        assert_eq!(gamma.len(), 2);
        let letters = gamma.letters();
        assert_eq!(letters[0].gen, build.piece_generator[&piece]);
        assert!(!letters[0].inv);
        assert!(letters[1].inv);
    }

    #[test]
    fn square_meridian_is_killed_exactly_by_yac() {
        // The worked example computes the square meridian as a product of
        // two digon meridians generating the rank-2 abelianization; setting
        // it to the identity must collapse the group to Z, so its
        // abelianized image is primitive.
        let shadow = samples::fig15_shadow();
        let (yabc, _) = select_regions(&shadow, &SelectionPreset::Yabc).unwrap();
        let cs = samples::fig15_path_cut(shadow.map());
        let words = meridian_words(&shadow, &yabc, &cs).unwrap();
        let square_piece = Piece {
            region: RegionId(2),
            index: 0,
        };
        let w = &words[&square_piece];
        assert!(!w.is_empty());
        // Appending the square meridian as a relator reproduces the Yac
        // group.
        let build = present_full(&shadow, &yabc, &cs).unwrap();
        let mut relators = build.presentation.relators.clone();
        relators.push(Word::letter(build.piece_generator[&square_piece], false));
        let quotient = Presentation::new(build.presentation.generators.clone(), relators).unwrap();
        assert_eq!(
            standard_fingerprint(&quotient).unwrap(),
            fp_of(&["x"], &[])
        );
    }

    #[test]
    fn gammas_vanish_when_gleams_equal_corner_sums() {
        for diagram in samples::decorated_catalog(2) {
            let gleams = samples::gleams_equal_c(&diagram);
            let shadow = ShadowedPolyhedron::new(diagram, gleams, None).unwrap();
            let selection = select_all_internal(shadow.map());
            let cs = auto_cut(shadow.map(), 1).unwrap();
            let build = present_full(&shadow, &selection, &cs).unwrap();
            for (_, gamma) in build.gammas {
                assert!(gamma.is_empty());
            }
        }
    }

    #[test]
    fn fig16_yabc_is_trefoil_group() {
        let shadow = samples::fig16_shadow();
        let (yabc, _) = select_regions(&shadow, &SelectionPreset::Yabc).unwrap();
        let cs = auto_cut(shadow.map(), 0).unwrap();
        let p = present(&shadow, &yabc, &cs).unwrap();
        assert_eq!(
            standard_fingerprint(&p).unwrap(),
            fp_of(&["x", "y"], &["x y x y^-1 x^-1 y^-1"])
        );
    }

    #[test]
    fn fig16_yac_is_z() {
        let shadow = samples::fig16_shadow();
        let (yac, _) = select_regions(&shadow, &SelectionPreset::Yac).unwrap();
        let cs = auto_cut(shadow.map(), 0).unwrap();
        let p = present(&shadow, &yac, &cs).unwrap();
        assert_eq!(standard_fingerprint(&p).unwrap(), fp_of(&["x"], &[]));
    }

    #[test]
    fn fig16_gamma_trivial_at_leaf_b_region() {
        // Both gleam -1 regions of the fixture satisfy gl = c; whenever one
        // of them is a leaf of the cutting forest its conjugating word is
        // empty.
        let shadow = samples::fig16_shadow();
        let map = shadow.map();
        let (yabc, _) = select_regions(&shadow, &SelectionPreset::Yabc).unwrap();
        let mut checked = false;
        for seed in 0..16 {
            let cs = auto_cut(map, seed).unwrap();
            let build = present_full(&shadow, &yabc, &cs).unwrap();
            for r in map.internal_regions() {
                let is_b = matches!(
                    shadow.label_of(r),
                    Some(crate::shadow::Label::B) | Some(crate::shadow::Label::Chamber)
                );
                let is_leaf = !map
                    .internal_regions()
                    .any(|s| cs.parent(map, s) == Some(r));
                if is_b && is_leaf {
                    assert!(build.gammas[&r].is_empty());
                    checked = true;
                }
            }
        }
        assert!(checked);
    }

    #[test]
    fn reduced_system_agrees_with_full_on_fig15() {
        let shadow = samples::fig15_shadow();
        let (yabc, _) = select_regions(&shadow, &SelectionPreset::Yabc).unwrap();
        let cs = samples::fig15_path_cut(shadow.map());
        let full = present(&shadow, &yabc, &cs).unwrap();
        let red = present_reduced(&shadow, &yabc, &cs).unwrap();
        assert_eq!(
            standard_fingerprint(&full).unwrap(),
            standard_fingerprint(&red).unwrap()
        );
        // With no single-edge trees the reduced presentation is identical.
        let chain = samples::chain_three();
        let over = samples::random_over(&chain, 5);
        let diagram =
            crate::shadow::LinkDiagramPresentation::with_default_orientation(chain, over).unwrap();
        let gleams = samples::random_parity_gleams(diagram.map(), 9);
        let shadow = ShadowedPolyhedron::new(diagram, gleams, None).unwrap();
        let path = samples::chain_three_path_cut(shadow.map());
        let sel = select_all_internal(shadow.map());
        let sel = SubSelection {
            regions: sel
                .regions
                .into_iter()
                .collect(),
        };
        let full = present(&shadow, &sel, &path).unwrap();
        let red = present_reduced(&shadow, &sel, &path).unwrap();
        assert_eq!(full, red);
    }

    #[test]
    fn reduced_system_requires_internal_selection() {
        let shadow = samples::fig15_shadow();
        let cs = samples::fig15_path_cut(shadow.map());
        let mut regions = select_all_internal(shadow.map()).regions;
        regions.insert(shadow.map().outer_region());
        let sel = SubSelection { regions };
        assert_eq!(
            present_reduced(&shadow, &sel, &cs).unwrap_err(),
            Error::SelectionTouchesBoundary
        );
    }

    #[test]
    fn wirtinger_trefoil() {
        let p = wirtinger(&samples::trefoil_diagram()).unwrap();
        assert_eq!(
            standard_fingerprint(&p).unwrap(),
            fp_of(&["x", "y"], &["x y x y^-1 x^-1 y^-1"])
        );
    }

    #[test]
    fn wirtinger_unknot_with_kink() {
        // A one-crossing kink diagram of the unknot.
        let map = samples::figure_eight();
        let diagram = crate::shadow::LinkDiagramPresentation::with_default_orientation(
            map,
            vec![crate::shadow::OverPair::Slots02],
        )
        .unwrap();
        let p = wirtinger(&diagram).unwrap();
        assert_eq!(standard_fingerprint(&p).unwrap(), fp_of(&["x"], &[]));
    }

    #[test]
    fn wirtinger_fig15_is_torus_link_group() {
        let shadow = samples::fig15_shadow();
        let p = wirtinger(&shadow.diagram).unwrap();
        // The group of the worked example, with Y = x y x^-1.
        assert_eq!(
            standard_fingerprint(&p).unwrap(),
            fp_of(
                &["x", "Y"],
                &["x^-1 Y x^-1 Y x Y^-1 x Y^-1"]
            )
        );
    }

    #[test]
    fn thm41_matches_on_fig15_with_adjusted_gleams() {
        let shadow = samples::fig15_shadow();
        // Digons 1, square -2.
        let gleams = crate::shadow::GleamFunction::from_internal_order(
            shadow.map(),
            &[2, -4, 2, 2, 2],
        )
        .unwrap();
        let adjusted = shadow.with_gleams(gleams);
        let cs = samples::fig15_path_cut(adjusted.map());
        match check_theorem_41(&adjusted, &cs).unwrap() {
            Thm41Report::Match { generator_map, .. } => {
                assert!(!generator_map.is_empty());
            }
            other => panic!("expected a match, got {other:?}"),
        }
        // The divide gleams themselves do not satisfy gl = c.
        match check_theorem_41(&shadow, &cs).unwrap() {
            Thm41Report::NotApplicable { .. } => {}
            other => panic!("expected not-applicable, got {other:?}"),
        }
    }

    #[test]
    fn thm41_random_instances() {
        for (i, diagram) in samples::decorated_catalog(2).into_iter().enumerate() {
            let gleams = samples::gleams_equal_c(&diagram);
            let shadow = ShadowedPolyhedron::new(diagram, gleams, None).unwrap();
            let cs = auto_cut(shadow.map(), i as u64).unwrap();
            match check_theorem_41(&shadow, &cs).unwrap() {
                Thm41Report::Match { .. } => {}
                other => panic!("mismatch on instance {i}: {other:?}"),
            }
        }
    }

    #[test]
    fn presentation_invariant_under_cutting_choice_and_decorations() {
        let shadow = samples::fig15_shadow();
        let (yabc, _) = select_regions(&shadow, &SelectionPreset::Yabc).unwrap();
        let base = standard_fingerprint(
            &present(&shadow, &yabc, &samples::fig15_path_cut(shadow.map())).unwrap(),
        )
        .unwrap();
        for seed in 0..5 {
            let cs = auto_cut(shadow.map(), seed).unwrap();
            let p = present(&shadow, &yabc, &cs).unwrap();
            assert_eq!(standard_fingerprint(&p).unwrap(), base, "seed {seed}");
        }
        // Over/under reassignment at fixed gleams.
        for seed in 0..4 {
            let over = samples::random_over(shadow.map(), seed);
            let changed = shadow.with_over(over).unwrap();
            let cs = auto_cut(changed.map(), 0).unwrap();
            let p = present(&changed, &yabc, &cs).unwrap();
            assert_eq!(standard_fingerprint(&p).unwrap(), base, "over seed {seed}");
        }
        // Orientation reversal.
        let reversed = shadow.reversed();
        let cs = auto_cut(reversed.map(), 0).unwrap();
        let p = present(&reversed, &yabc, &cs).unwrap();
        assert_eq!(standard_fingerprint(&p).unwrap(), base);
    }

    #[test]
    fn simplification_collapses_worked_examples() {
        // The Morse-divide group collapses to at most two generators and
        // one relator; the arrangement group to four generators and the
        // three cyclic relations.
        let shadow = samples::fig15_shadow();
        let (yabc, _) = select_regions(&shadow, &SelectionPreset::Yabc).unwrap();
        let cs = samples::fig15_path_cut(shadow.map());
        let raw = present(&shadow, &yabc, &cs).unwrap();
        let small = crate::group::tietze_simplify(&raw, 64);
        assert!(small.rank() <= 2, "rank {}", small.rank());
        assert_eq!(small.relators.len(), 1);
        assert_eq!(
            standard_fingerprint(&raw).unwrap(),
            standard_fingerprint(&small).unwrap()
        );

        let shadow = samples::fig18_shadow();
        let (yabc, _) = select_regions(&shadow, &SelectionPreset::Yabc).unwrap();
        let cs = auto_cut(shadow.map(), 0).unwrap();
        let raw = present_reduced(&shadow, &yabc, &cs).unwrap();
        let small = crate::group::tietze_simplify(&raw, 64);
        assert_eq!(small.rank(), 4);
        assert_eq!(small.relators.len(), 3);
    }

    #[test]
    fn generic_arrangement_fiber_complement_is_free_abelian_of_rank_k() {
        // Y_a square c of a generic k-line arrangement abelianizes freely
        // with rank k.
        let lines: Vec<crate::builders::LineCoeffs> = vec![
            ((0, 1), (1, 1), (0, 1)),
            ((2, 1), (-1, 1), (2, 1)),
            ((-2, 1), (-1, 1), (2, 1)),
            ((1, 2), (-1, 1), (3, 1)),
        ];
        for k in 2..=4 {
            let arr = crate::builders::LineArrangement::new(&lines[..k]).unwrap();
            let divide = crate::builders::arrangement_to_divide(&arr).unwrap();
            let shadow = crate::builders::double_divide(&divide).unwrap();
            let (sel, _) = select_regions(&shadow, &SelectionPreset::YaSquareC).unwrap();
            let cs = auto_cut(shadow.map(), 0).unwrap();
            let p = present(&shadow, &sel, &cs).unwrap();
            let ab = crate::group::abelianization(&crate::group::tietze_simplify(&p, 64));
            assert_eq!(ab.rank, k, "k = {k}");
            assert!(ab.torsion.is_empty());
        }
    }

    #[test]
    fn whole_shadow_selection_presents() {
        // A custom selection containing the outer region (Y = X) is legal
        // for the full system; the result is cutting-choice independent.
        let shadow = samples::fig15_shadow();
        let mut regions = select_all_internal(shadow.map()).regions;
        regions.insert(shadow.map().outer_region());
        let sel = SubSelection { regions };
        let base = standard_fingerprint(
            &present(&shadow, &sel, &auto_cut(shadow.map(), 0).unwrap()).unwrap(),
        )
        .unwrap();
        for seed in 1..3 {
            let cs = auto_cut(shadow.map(), seed).unwrap();
            let p = present(&shadow, &sel, &cs).unwrap();
            assert_eq!(standard_fingerprint(&p).unwrap(), base);
        }
    }

    #[test]
    fn no_orphan_generators() {
        // Every generator appears in some relator or is a strand meridian.
        let shadow = samples::fig16_shadow();
        let (yabc, _) = select_regions(&shadow, &SelectionPreset::Yabc).unwrap();
        let cs = auto_cut(shadow.map(), 0).unwrap();
        let build = present_full(&shadow, &yabc, &cs).unwrap();
        let p = &build.presentation;
        let strand_gen_count = build.strand_generator.len() as u32;
        let mut used = vec![false; p.generators.len()];
        for r in &p.relators {
            for l in r.letters() {
                used[l.gen as usize] = true;
            }
        }
        for (i, u) in used.iter().enumerate() {
            assert!(*u || (i as u32) < strand_gen_count, "orphan generator {i}");
        }
    }
}
