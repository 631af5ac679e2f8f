//! Regenerates the figure fixture files under fixtures/.

use std::fs;

use polyshadow::builders::double_divide_with_layout;
use polyshadow::io;
use polyshadow::samples;

fn main() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures");

    // Shadow fixtures. fig15 is the hand-encoded crossing table; fig16 and
    // fig18 come from the doubling construction, fig16 with the worked
    // example's over/under choice.
    fs::write(
        dir.join("fig15.shadow.json"),
        io::shadow_to_string(&samples::fig15_shadow(), None),
    )
    .unwrap();

    let fig16 = samples::fig16_shadow();
    let (_, layout16) = double_divide_with_layout(&samples::fig16_divide()).unwrap();
    fs::write(
        dir.join("fig16.shadow.json"),
        io::shadow_to_string(&fig16, Some(&layout16)),
    )
    .unwrap();

    let divide18 =
        polyshadow::builders::arrangement_to_divide(&samples::fig18_arrangement()).unwrap();
    let (fig18, layout18) = double_divide_with_layout(&divide18).unwrap();
    fs::write(
        dir.join("fig18.shadow.json"),
        io::shadow_to_string(&fig18, Some(&layout18)),
    )
    .unwrap();

    // Geometric inputs for the CLI pipelines.
    fs::write(
        dir.join("fig15.divide.json"),
        r#"{
  "schema": "divide/1",
  "components": [
    { "closed": false, "points": [[[-2,1],[0,1]], [[2,1],[0,1]]] },
    { "closed": false, "points": [[[0,1],[-2,1]], [[0,1],[2,1]]] }
  ]
}
"#,
    )
    .unwrap();
    fs::write(
        dir.join("fig16.divide.json"),
        r#"{
  "schema": "divide/1",
  "components": [
    { "closed": false,
      "points": [[[-4,1],[-2,1]], [[2,1],[2,1]], [[4,1],[0,1]], [[2,1],[-2,1]], [[-1,1],[2,1]]] }
  ]
}
"#,
    )
    .unwrap();
    fs::write(
        dir.join("fig18.arr.json"),
        r#"{
  "schema": "arrangement/1",
  "lines": [
    [[0,1], [1,1], [0,1]],
    [[2,1], [-1,1], [2,1]],
    [[-2,1], [-1,1], [2,1]],
    [[1,2], [-1,1], [3,1]]
  ]
}
"#,
    )
    .unwrap();
    println!("fixtures written to {}", dir.display());
}
