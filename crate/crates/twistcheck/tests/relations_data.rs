//! The shipped proof scripts are exactly what the stage generator
//! produces, and they replay successfully from disk.

use std::path::PathBuf;

use twistcheck::relations::{
    generate_relation_scripts, script_file_name, verify_relation, RelationFamily,
};

fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

#[test]
fn shipped_scripts_match_generator_and_replay() {
    let data = data_dir();
    for fam in [RelationFamily::A, RelationFamily::B] {
        let (generated_final, texts) = generate_relation_scripts(fam, &data).unwrap();
        for (name, text) in &texts {
            let on_disk = std::fs::read_to_string(data.join("scripts").join(name)).unwrap();
            assert_eq!(&on_disk, text, "script {name} differs from its generator");
        }
        assert_eq!(texts.len(), 4);
        for (r, (name, _)) in (5..=8).zip(&texts) {
            assert_eq!(name, &script_file_name(fam, r));
        }
        let replayed_final = verify_relation(fam, &data).unwrap();
        assert_eq!(replayed_final, generated_final);
    }
}
