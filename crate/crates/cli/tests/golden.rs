use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use fillpair::document::{OrigamiDocument, PairDocument, SchemeDocument};
use jsonschema::JSONSchema;
use serde_json::Value;

fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

fn schema_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../docs/schemas")
}

fn read_json(path: &Path) -> Value {
    serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap()
}

/// Compiles a schema, inlining the scheme schema wherever it is referenced.
fn schema(name: &str) -> JSONSchema {
    let mut scheme = read_json(&schema_dir().join("scheme.schema.json"));
    scheme.as_object_mut().unwrap().remove("$id");
    scheme.as_object_mut().unwrap().remove("$schema");
    let mut root = read_json(&schema_dir().join(name));
    // Relative ids need a base URL; the files are resolved by name here.
    root.as_object_mut().unwrap().remove("$id");
    inline(&mut root, &scheme);
    JSONSchema::compile(&root).unwrap()
}

fn inline(value: &mut Value, scheme: &Value) {
    match value {
        Value::Object(map) => {
            if map.get("$ref") == Some(&Value::String("scheme.schema.json".into())) {
                *value = scheme.clone();
                return;
            }
            map.values_mut().for_each(|v| inline(v, scheme));
        }
        Value::Array(items) => items.iter_mut().for_each(|v| inline(v, scheme)),
        _ => {}
    }
}

fn goldens(prefix: &str, ext: &str) -> Vec<PathBuf> {
    let mut out: Vec<PathBuf> = fs::read_dir(golden_dir())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| {
            let name = p.file_name().unwrap().to_string_lossy();
            name.starts_with(prefix) && name.ends_with(ext)
        })
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no {prefix}*{ext} goldens");
    out
}

fn assert_valid(schema: &JSONSchema, path: &Path) {
    let value = read_json(path);
    let messages: Vec<String> = match schema.validate(&value) {
        Ok(()) => return,
        Err(errors) => errors.map(|e| e.to_string()).collect(),
    };
    panic!("{} violates its schema: {messages:?}", path.display());
}

#[test]
fn pair_documents_are_fixpoints() {
    let schema = schema("pair.schema.json");
    for path in goldens("pair_", ".json") {
        let text = fs::read_to_string(&path).unwrap();
        let doc = PairDocument::parse(&text).unwrap();
        assert_eq!(doc.to_json(), text, "{}", path.display());
        let again = PairDocument::parse(&doc.to_json()).unwrap();
        assert_eq!(again, doc);
        doc.to_pair().unwrap();
        assert_valid(&schema, &path);
    }
}

#[test]
fn scheme_documents_are_fixpoints() {
    let schema = schema("scheme.schema.json");
    for path in goldens("scheme_", ".json") {
        let text = fs::read_to_string(&path).unwrap();
        let doc = SchemeDocument::parse(&text).unwrap();
        assert_eq!(doc.to_json(), text, "{}", path.display());
        doc.to_scheme().unwrap();
        assert_valid(&schema, &path);
    }
}

#[test]
fn origami_documents_are_fixpoints() {
    let schema = schema("origami.schema.json");
    for path in goldens("origami_", ".json") {
        let text = fs::read_to_string(&path).unwrap();
        let doc = OrigamiDocument::parse(&text).unwrap();
        assert_eq!(doc.to_json(), text, "{}", path.display());
        doc.to_origami().unwrap();
        assert_valid(&schema, &path);
    }
}

#[test]
fn schemas_reject_malformed_documents() {
    let pair = schema("pair.schema.json");
    let bad = serde_json::json!({"version": 2, "n": 1, "alpha_order": [0], "beta_order": [0]});
    assert!(!pair.is_valid(&bad));
    let bad = serde_json::json!({"version": 1, "n": 1, "alpha_order": [0], "beta_order": [0], "signs": [0]});
    assert!(!pair.is_valid(&bad));
    let scheme = schema("scheme.schema.json");
    let bad = serde_json::json!({"version": 1, "seed_m": 3, "surgeries": [{"crossing": 0, "kind": "triple"}]});
    assert!(!scheme.is_valid(&bad));
}

/// Re-runs the commands that produced each golden file and compares bytes.
#[test]
fn commands_reproduce_goldens() {
    let dir = tempfile::tempdir().unwrap();
    let g = golden_dir();
    let seed3 = dir.path().join("seed3.json");
    fs::write(&seed3, "{\"version\": 1, \"seed_m\": 3}\n").unwrap();
    let cases: Vec<(&str, Vec<String>)> = vec![
        (
            "pair_genus3.json",
            args(&["construct", "--genus", "3", "--out", "@"]),
        ),
        (
            "pair_genus6.json",
            args(&["construct", "--genus", "6", "--out", "@"]),
        ),
        (
            "pair_genus4_p2.json",
            args(&[
                "construct",
                "--genus",
                "4",
                "--punctures",
                "2",
                "--out",
                "@",
            ]),
        ),
        (
            "scheme_odd5.json",
            args(&["scheme", "--genus", "5", "--out", "@"]),
        ),
        (
            "pair_seed3.json",
            vec![
                "apply-scheme".into(),
                seed3.display().to_string(),
                "--out".into(),
                "@".into(),
            ],
        ),
        (
            "pair_arc6.json",
            vec![
                "apply-scheme".into(),
                path(&g, "scheme_arc6.json"),
                "--out".into(),
                "@".into(),
            ],
        ),
        (
            "origami_genus3.json",
            vec![
                "origami".into(),
                path(&g, "pair_genus3.json"),
                "--out".into(),
                "@".into(),
            ],
        ),
        (
            "strip_seed3.svg",
            vec![
                "render".into(),
                path(&g, "pair_seed3.json"),
                "--svg".into(),
                "@".into(),
            ],
        ),
        (
            "strip_genus6.svg",
            vec![
                "render".into(),
                path(&g, "pair_genus6.json"),
                "--svg".into(),
                "@".into(),
            ],
        ),
        (
            "tiling_genus3.svg",
            vec![
                "render".into(),
                path(&g, "pair_genus3.json"),
                "--svg".into(),
                "@".into(),
                "--style".into(),
                "tiling".into(),
            ],
        ),
        (
            "agraph_cyclic.dot",
            vec![
                "agraph".into(),
                path(&g, "scheme_cyclic.json"),
                "--dot".into(),
                "@".into(),
            ],
        ),
        (
            "agraph_odd5.dot",
            vec![
                "agraph".into(),
                path(&g, "scheme_odd5.json"),
                "--dot".into(),
                "@".into(),
            ],
        ),
    ];
    for (name, argv) in cases {
        for round in 0..2 {
            let out = dir.path().join(format!("{round}-{name}"));
            let argv: Vec<String> = argv
                .iter()
                .map(|a| {
                    if a == "@" {
                        out.display().to_string()
                    } else {
                        a.clone()
                    }
                })
                .collect();
            let status = Command::new(env!("CARGO_BIN_EXE_fillpair"))
                .args(&argv)
                .output()
                .unwrap();
            assert!(status.status.success(), "{name}: {argv:?}");
            let produced = fs::read(&out).unwrap();
            let expected = fs::read(g.join(name)).unwrap();
            assert!(produced == expected, "{name} differs from its golden file");
        }
    }
}

fn args(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

fn path(dir: &Path, name: &str) -> String {
    dir.join(name).display().to_string()
}
