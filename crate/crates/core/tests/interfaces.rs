//! Files shared with the annotation UI stay in step with the loaders.

use std::path::PathBuf;

use bedpose::annotations::{AnnotationFile, FrameAnnotation};
use bedpose::colormap::colormap_fixture_json;
use bedpose::skeleton::{JointName, Keypoint, KeypointSet};
use serde_json::Value;

fn interface(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../interfaces").join(name)
}

fn schema() -> Value {
    serde_json::from_str(&std::fs::read_to_string(interface("annotation.schema.json")).unwrap()).unwrap()
}

fn keys(v: &Value) -> Vec<String> {
    let mut k: Vec<String> = v.as_object().unwrap().keys().cloned().collect();
    k.sort();
    k
}

#[test]
fn colormap_fixture_is_current() {
    let stored = std::fs::read_to_string(interface("colormaps.json")).unwrap();
    assert!(stored == colormap_fixture_json(), "regenerate with `bedpose colormaps --fixture`");
}

#[test]
fn schema_joint_names_are_canonical_and_ordered() {
    let s = schema();
    let names: Vec<&str> =
        s["$defs"]["joint_name"]["enum"].as_array().unwrap().iter().map(|v| v.as_str().unwrap()).collect();
    assert_eq!(names, JointName::ALL.map(|j| j.name()));
}

/// The schema describes exactly the fields the loader writes and requires.
#[test]
fn schema_fields_match_serialized_files() {
    let s = schema();
    let kps = KeypointSet { joints: [Keypoint::visible(1.0, 2.0); 14] };
    let file = serde_json::to_value(AnnotationFile::new("S01", "q", &[(0, kps)])).unwrap();
    let frame = serde_json::to_value(FrameAnnotation::from_keypoints(0, &kps)).unwrap();
    for (schema_obj, value) in
        [(&s, &file), (&s["$defs"]["frame"], &frame), (&s["$defs"]["keypoint"], &frame["keypoints"][0])]
    {
        assert_eq!(keys(&schema_obj["properties"]), keys(value));
        let mut required: Vec<String> =
            schema_obj["required"].as_array().unwrap().iter().map(|v| v.as_str().unwrap().to_string()).collect();
        required.sort();
        assert_eq!(required, keys(value));
        assert_eq!(schema_obj["additionalProperties"], false);
    }
}

#[test]
fn example_annotation_loads() {
    let file = AnnotationFile::read(&interface("example_annotation.json")).unwrap();
    let sets = file.keypoint_sets().unwrap();
    assert_eq!(sets.len(), 2);
    assert!(!sets[&1][JointName::RightWrist].visible);
}
