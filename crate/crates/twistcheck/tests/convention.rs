//! Pins the orientation/handedness convention of the engine.
//!
//! The polygon model is oriented counterclockwise and `twist` claims to be
//! the right-handed Dehn twist. Two independent checks pin the insertion
//! sign: the lantern relation in its standard form on the four-holed
//! sphere, and the transvection action on the torus.

use twistcheck::curve::Curve;
use twistcheck::homology::{homology_action, pairing_matrix, transvection};
use twistcheck::mapclass::{twist, MappingClass};
use twistcheck::surface::{SurfaceModel, SurfaceSig};
use twistcheck::word::Word;

fn curve(m: &SurfaceModel, letters: &[i16]) -> Curve {
    Curve::from_word(m, &Word::from_letters(letters.iter().copied())).unwrap()
}

fn product(m: &SurfaceModel, curves: &[&Curve]) -> MappingClass {
    curves.iter().fold(MappingClass::identity(m.sig), |acc, c| {
        acc.compose(&twist(m, c).unwrap()).unwrap()
    })
}

#[test]
fn lantern_relation_in_standard_form() {
    // Σ_{0,4}: cuffs δ1..δ4; interior curves γ (holes 2,3), σ (holes 2,4),
    // α (holes 3,4), pairwise intersecting twice. The right-handed twist
    // convention is the one for which t_δ1 t_δ2 t_δ3 t_δ4 = t_γ t_σ t_α.
    let m = SurfaceModel::build(SurfaceSig::new(0, 4)).unwrap();
    let d1 = Curve::from_word(&m, &m.boundary_word(1).clone()).unwrap();
    let d2 = curve(&m, &[1]);
    let d3 = curve(&m, &[2]);
    let d4 = curve(&m, &[3]);
    let gamma = curve(&m, &[1, 2]);
    let sigma = curve(&m, &[1, 3]);
    let alpha = curve(&m, &[2, 3]);

    for (a, b) in [(&gamma, &sigma), (&gamma, &alpha), (&sigma, &alpha)] {
        assert_eq!(a.geometric_intersection(&m, b).unwrap(), 2);
    }
    for cuff in [&d1, &d2, &d3, &d4] {
        for int in [&gamma, &sigma, &alpha] {
            assert_eq!(cuff.geometric_intersection(&m, int).unwrap(), 0);
        }
    }

    let lhs = product(&m, &[&d1, &d2, &d3, &d4]);
    let rhs = product(&m, &[&gamma, &sigma, &alpha]);
    assert!(lhs.equals(&rhs), "lantern relation must hold in the form γσα");

    // the mirrored order fails, so the handedness is genuinely pinned
    let mirrored = product(&m, &[&alpha, &sigma, &gamma]);
    assert!(!lhs.equals(&mirrored));
}

#[test]
fn torus_transvection_direction() {
    let m = SurfaceModel::build(SurfaceSig::new(1, 1)).unwrap();
    let a = curve(&m, &[1]);
    let b = curve(&m, &[2]);
    let t = twist(&m, &b).unwrap();
    assert_eq!(homology_action(&t), transvection(&m, &b));
    // twist((0,1)) sends (1,0) to a (1,1)-class
    let img = t.apply(&m, &a).unwrap().homology_class();
    assert_eq!(img.iter().map(|x| x.abs()).collect::<Vec<_>>(), vec![1, 1]);
    // pairing matrix is the standard symplectic form up to global sign
    let j = pairing_matrix(&m);
    assert_eq!(j[0][1].abs(), 1);
    assert_eq!(j[0][1], -j[1][0]);
}

#[test]
fn chain_relation_on_two_holed_torus() {
    // (t_{c1} t_{c2} t_{c3})^4 = t_{∂1} t_{∂2} for a 3-chain on Σ_{1,2}.
    let m = SurfaceModel::build(SurfaceSig::new(1, 2)).unwrap();
    let c1 = curve(&m, &[1]);
    let c2 = curve(&m, &[2]);
    // second meridian separated from the first by the extra boundary hole
    let c3 = curve(&m, &[1, 3]);
    assert_eq!(c1.geometric_intersection(&m, &c2).unwrap(), 1);
    assert_eq!(c2.geometric_intersection(&m, &c3).unwrap(), 1);
    assert_eq!(c1.geometric_intersection(&m, &c3).unwrap(), 0);

    let step = product(&m, &[&c1, &c2, &c3]);
    let mut lhs = MappingClass::identity(m.sig);
    for _ in 0..4 {
        lhs = lhs.compose(&step).unwrap();
    }
    let d1 = Curve::from_word(&m, &m.boundary_word(1).clone()).unwrap();
    let d2 = Curve::from_word(&m, &m.boundary_word(2).clone()).unwrap();
    let rhs = product(&m, &[&d1, &d2]);
    assert!(lhs.equals(&rhs), "chain relation (c1 c2 c3)^4 = t_∂1 t_∂2");
}
