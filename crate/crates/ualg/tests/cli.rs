mod common;

use common::*;
use serde_json::Value;

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.push("--json");
    let out = ualg(&all);
    let v = serde_json::from_str(&stdout(&out)).unwrap_or_else(|e| panic!("{e}: {}", stdout(&out)));
    (out.status.code().unwrap(), v)
}

fn gf() -> String {
    fixture("gf_tower.toml").to_str().unwrap().to_owned()
}

#[test]
fn fixtures_round_trip_byte_identically() {
    let fixtures = all_fixtures();
    assert!(fixtures.len() >= 5);
    for f in fixtures {
        assert_eq!(round_trip_failure(&f), None, "{}", f.display());
    }
}

#[test]
fn malformed_input_matrix() {
    let cases = malformed_matrix();
    assert!(cases.len() >= 10);
    for case in &cases {
        assert_eq!(run_case(case), None, "case `{}`", case.name);
    }
}

#[test]
fn every_fixture_validates() {
    for f in all_fixtures() {
        let out = ualg(&["validate", f.to_str().unwrap()]);
        assert_eq!(
            out.status.code(),
            Some(0),
            "{}: {}",
            f.display(),
            stdout(&out)
        );
    }
}

#[test]
fn reports_carry_the_schema() {
    let (code, v) = json(&["validate", &gf()]);
    assert_eq!(code, 0);
    assert_eq!(v["schema"], "ualg-report/1");
    assert_eq!(v["status"], "ok");
    assert_eq!(v["towers"]["gf"]["effective"], true);

    let (code, v) = json(&["closure", &gf(), "--target", "nope"]);
    assert_eq!(code, 1);
    assert_eq!(v["status"], "error");
}

#[test]
fn gf_closure_of_omega_and_e1() {
    let (code, v) = json(&[
        "closure",
        &gf(),
        "--target",
        "gf",
        "--generators",
        "omega_e1",
        "--coords",
        "--oracle",
    ]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["layers"][1]["elements"].as_array().unwrap().len(), 4);
    assert_eq!(
        v["layers"][2]["elements"],
        serde_json::json!(["0:0", "1:0", "w:0", "w2:0"])
    );
    assert_eq!(
        v["layers"][2]["coordinates"]["w:0"],
        "act(gen(2, w), gen(3, 1:0))"
    );
    assert_eq!(v["oracle"]["agrees"], true);
}

#[test]
fn full_seed_closes_to_full_carriers() {
    let (code, v) = json(&[
        "closure",
        &gf(),
        "--target",
        "gf",
        "--set",
        "0,1,w,w2;0:0,0:1,1:0",
    ]);
    assert_eq!(code, 0);
    let sizes: Vec<u64> = v["layers"]
        .as_array()
        .unwrap()
        .iter()
        .map(|l| l["elements"].as_array().unwrap().len() as u64)
        .collect();
    assert_eq!(sizes, vec![2, 4, 16]);
}

#[test]
fn gf_basis_sizes() {
    let (code, v) = json(&["basis", &gf(), "--target", "gf", "--oracle"]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["sizes"], serde_json::json!([1, 2]));
    let (code, v) = json(&["basis", &gf(), "--target", "gf", "--generators", "standard"]);
    assert_eq!(code, 0);
    assert_eq!(v["basis"], serde_json::json!([["w"], ["0:1", "1:0"]]));
}

#[test]
fn automorphism_counts() {
    let (code, v) = json(&[
        "automorphisms",
        fixture("trivial.toml").to_str().unwrap(),
        "--target",
        "point",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["count"], 1);
    let (code, v) = json(&["automorphisms", &gf(), "--target", "gf"]);
    assert_eq!(code, 0);
    assert_eq!(v["count"], 360);
    let (code, v) = json(&[
        "automorphisms",
        fixture("translations.toml").to_str().unwrap(),
        "--target",
        "t3",
        "--oracle",
        "--list",
    ]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["count"], 6);
    assert_eq!(v["members"].as_array().unwrap().len(), 6);
}

#[test]
fn identity_decomposes_into_identities() {
    let tr = fixture("translations.toml");
    let (code, v) = json(&["decompose", tr.to_str().unwrap(), "--morphism", "id3"]);
    assert_eq!(code, 0, "{v}");
    for k in ["j", "t", "i"] {
        assert_eq!(v["factors"][k], serde_json::json!([0, 1, 2]), "{k}");
    }
    let (code, v) = json(&["decompose", tr.to_str().unwrap(), "--morphism", "mod2"]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["domain_classes"], serde_json::json!(["{0, 2}", "{1, 3}"]));
    assert_eq!(v["space_image"], serde_json::json!(["q0", "q1"]));
}

#[test]
fn derive_and_extend_on_gf() {
    let (code, v) = json(&["derive", &gf(), "--tower", "gf"]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["effective"], true);
    assert_eq!(v["images"].as_array().unwrap().len(), 4);
    let (code, v) = json(&["extend", &gf(), "--tower", "gf"]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["identity_preimages"], serde_json::json!(["1"]));
}

#[test]
fn sign_then_translate_extension_is_reported() {
    let st = fixture("sign_then_translate.toml");
    let (code, v) = json(&["derive", st.to_str().unwrap(), "--tower", "st"]);
    assert_eq!(code, 0);
    assert_eq!(v["effective"], true);
    let (code, v) = json(&["extend", st.to_str().unwrap(), "--tower", "st"]);
    assert_eq!(code, 3);
    assert_eq!(v["effective"], false);
    assert_eq!(v["status"], "check-failed");
}

#[test]
fn coords_and_named_words() {
    let out = ualg(&[
        "coords",
        &gf(),
        "--target",
        "gf",
        "--generators",
        "omega_e1",
        "--layer",
        "2",
        "--element",
        "w2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("w2 = op(*, gen(2, w), gen(2, w))"));
    let (code, v) = json(&["coords", &gf(), "--word", "w2"]);
    assert_eq!(code, 0);
    assert_eq!(v["value"], "w2");
    let out = ualg(&[
        "coords",
        &gf(),
        "--target",
        "gf",
        "--generators",
        "omega_e1",
        "--layer",
        "3",
        "--element",
        "0:1",
    ]);
    assert_eq!(out.status.code(), Some(1), "not generated by the seed");
}

#[test]
fn morphism_checks() {
    let tr = fixture("translations.toml");
    for m in ["id3", "double3", "mod2"] {
        let out = ualg(&["morphism-check", tr.to_str().unwrap(), "--morphism", m]);
        assert_eq!(out.status.code(), Some(0), "{m}: {}", stdout(&out));
    }
    let out = ualg(&["morphism-check", &gf(), "--morphism", "frobenius"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
}

#[test]
fn right_action_loads_as_left_action_of_the_opposite() {
    let ra = fixture("right_action.toml");
    let (code, v) = json(&["validate", ra.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["representations"]["right"]["single_transitive"], true);
    let (code, v) = json(&["automorphisms", ra.to_str().unwrap(), "--target", "right"]);
    assert_eq!(code, 0, "{v}");
    // Aut(S3) ≅ S3, each automorphism pairs with 6 compatible space maps
    assert_eq!(v["count"], 36);
}
