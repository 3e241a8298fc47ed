//! End-to-end tests of the `squarediagram` binary: exit codes, JSON
//! stability, and golden renderings.
//!
//! Set `UPDATE_GOLDEN=1` to rewrite the files under `tests/golden/`.

use std::path::PathBuf;
use std::process::{Command, Output};

use squarediagram::enumeration::enumerate_genus;

const FIRST_EXAMPLE_GAPS: &str = "1,2,3,5,6,7,9,10,11,13,14,15,18,22,26,30";
const SYMMETRIC_EXAMPLE_GAPS: &str = "1,2,3,5,6,7,9,10,11,13,14,15,19,23,27,31";

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_squarediagram"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON")
}

fn assert_golden(name: &str, actual: &str) {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, actual).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("missing golden file {}: {e}", path.display()));
    assert_eq!(actual, expected, "golden mismatch for {name}");
}

#[test]
fn info_two_three() {
    let o = run(&["info", "--gens", "2,3", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["genus"], 1);
    assert_eq!(v["conductor"], 2);
    assert_eq!(v["symmetric"], true);
    assert_eq!(v["weight"], 0);
    assert_eq!(v["path"], "UR");
    assert_eq!(v["gaps"], serde_json::json!([1]));
}

#[test]
fn info_first_example() {
    let o = run(&["info", "--gaps", FIRST_EXAMPLE_GAPS, "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["genus"], 16);
    assert_eq!(v["conductor"], 31);
    assert_eq!(v["symmetric"], false);
    assert_eq!(v["weight"], 56);

    let text = run(&["info", "--gaps", FIRST_EXAMPLE_GAPS]);
    assert_golden("info_first_example.txt", &stdout(&text));
}

#[test]
fn json_field_set_is_frozen() {
    let o = run(&["info", "--gens", "3,5", "--format", "json"]);
    let v = json(&o);
    let mut keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    keys.sort_unstable();
    assert_eq!(
        keys,
        ["conductor", "gaps", "genus", "path", "symmetric", "weight"]
    );
    assert!(stdout(&o).starts_with("{\"genus\":4,\"conductor\":8,\"symmetric\":true,\"weight\":4,"));
}

#[test]
fn invalid_semigroups_exit_three_with_witness() {
    let o = run(&["info", "--gaps", "2"]);
    assert_eq!(code(&o), 3);
    assert!(stderr(&o).contains("witness: 1 + 1 = 2"), "{}", stderr(&o));

    let o = run(&["info", "--gens", "4,6"]);
    assert_eq!(code(&o), 3);
    assert!(stderr(&o).contains("gcd 2"), "{}", stderr(&o));

    assert_eq!(code(&run(&["render", "--gaps", "2"])), 3);
    assert_eq!(code(&run(&["path", "--gens", "40,41"])), 3);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(code(&run(&["info", "--gaps", "1,x"])), 2);
    assert_eq!(code(&run(&["info", "--gaps", "1", "--gens", "2,3"])), 2);
    assert_eq!(code(&run(&["info"])), 2);
    assert_eq!(code(&run(&["info", "--gens", "2,3", "--format", "xml"])), 2);
    assert_eq!(code(&run(&["frobnicate"])), 2);
}

#[test]
fn path_subcommand_prints_only_the_path() {
    let o = run(&["path", "--gens", "4,17,19"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "UUURUUURUUURUUURRURRRURRRURRRURR\n");
}

#[test]
fn decode_examples() {
    let o = run(&["decode", "UR", "--format", "json"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["gaps"], serde_json::json!([1]));

    let o = run(&["decode", "URUURRURUR"]);
    assert_eq!(code(&o), 4);
    assert!(stderr(&o).contains("witness: 2 + 2 = 4"), "{}", stderr(&o));

    assert_eq!(code(&run(&["decode", "RU"])), 2);
    assert_eq!(code(&run(&["decode", "UXR"])), 2);
    assert_eq!(code(&run(&["decode", "UUR"])), 2);

    let o = run(&["decode", "", "--format", "json"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["genus"], 0);
}

#[test]
fn decode_output_matches_info_output() {
    let info = run(&["info", "--gaps", SYMMETRIC_EXAMPLE_GAPS]);
    let path = json(&run(&[
        "info",
        "--gaps",
        SYMMETRIC_EXAMPLE_GAPS,
        "--format",
        "json",
    ]))["path"]
        .as_str()
        .unwrap()
        .to_owned();
    let decoded = run(&["decode", &path]);
    assert_eq!(code(&decoded), 0);
    assert_eq!(stdout(&decoded), stdout(&info));
}

#[test]
fn json_and_decode_round_trip_over_small_genus() {
    for g in 0..=5 {
        for s in enumerate_genus(g).unwrap() {
            let gaps: Vec<String> = s.gaps().iter().map(u32::to_string).collect();
            let first = run(&["info", "--gaps", &gaps.join(","), "--format", "json"]);
            assert_eq!(code(&first), 0);
            let v = json(&first);

            let emitted: Vec<String> = v["gaps"]
                .as_array()
                .unwrap()
                .iter()
                .map(|x| x.to_string())
                .collect();
            let second = run(&["info", "--gaps", &emitted.join(","), "--format", "json"]);
            assert_eq!(first.stdout, second.stdout, "{s}");

            let decoded = run(&["decode", v["path"].as_str().unwrap(), "--format", "json"]);
            assert_eq!(first.stdout, decoded.stdout, "{s}");
        }
    }
}

#[test]
fn render_goldens() {
    let o = run(&["render", "--gens", "2,3"]);
    assert_eq!(code(&o), 0);
    assert_golden("render_two_three.txt", &stdout(&o));

    let o = run(&["render", "--gaps", FIRST_EXAMPLE_GAPS]);
    assert_golden("render_first_example.txt", &stdout(&o));

    let o = run(&["render", "--gaps", SYMMETRIC_EXAMPLE_GAPS, "--antidiagonal"]);
    assert_golden("render_symmetric_antidiagonal.txt", &stdout(&o));

    let o = run(&["render", "--gaps", ""]);
    assert_eq!(stdout(&o), "(empty diagram)\n");
    assert_golden("render_empty.txt", &stdout(&o));
}

#[test]
fn symmetric_render_is_mirror_symmetric_about_the_overlay() {
    let o = run(&["render", "--gaps", SYMMETRIC_EXAMPLE_GAPS, "--antidiagonal"]);
    let rows: Vec<Vec<char>> = stdout(&o).lines().map(|l| l.chars().collect()).collect();
    let g = rows.len();
    // rows[0] is y = g - 1. Within the (g-1)-square, a marked cell (x, y)
    // mirrors to (g-2-y, g-2-x), and up marks swap with right marks.
    let at = |x: usize, y: usize| rows[g - 1 - y][x];
    for y in 0..g - 1 {
        for x in 0..g - 1 {
            let (c, m) = (at(x, y), at(g - 2 - y, g - 2 - x));
            let expected = match c {
                '^' => '>',
                '>' => '^',
                other => other,
            };
            assert!(
                m == expected || (c == '>' && m == '>'),
                "({x},{y})={c:?} vs mirror {m:?}"
            );
        }
    }
}

#[test]
fn census_rows_and_exit_codes() {
    let o = run(&["census", "--genus-max", "4", "--verify-oracle"]);
    assert_eq!(code(&o), 0);
    assert_golden("census_4.txt", &stdout(&o));

    let o = run(&["census", "--genus-max", "4", "--format", "json"]);
    let totals: Vec<u64> = json(&o)
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["total"].as_u64().unwrap())
        .collect();
    assert_eq!(totals, [1, 2, 4, 7]);

    let o = run(&["census", "--genus-max", "1", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let row = &json(&o)[0];
    assert_eq!(
        (row["total"].as_u64(), row["catalan_bound"].as_u64()),
        (Some(1), Some(1))
    );
    assert_eq!(row["total_within_catalan"], true);

    assert_eq!(code(&run(&["census", "--genus-max", "0"])), 2);
    assert_eq!(code(&run(&["census", "--genus-max", "31"])), 2);
    assert_eq!(code(&run(&["census", "--genus-max", "ten"])), 2);
}

/// Every `$ squarediagram ...` transcript in the guide's CLI chapter must
/// match what the binary prints (stdout then stderr).
#[test]
fn book_transcripts_match_binary() {
    let chapter = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../book/src/cli.md");
    let text = std::fs::read_to_string(chapter).unwrap();
    let mut checked = 0;
    let mut in_fence = false;
    let mut current: Option<(String, String)> = None;
    let mut flush = |cur: &mut Option<(String, String)>| {
        if let Some((cmd, expected)) = cur.take() {
            let args: Vec<&str> = cmd.split_whitespace().skip(1).collect();
            let o = run(&args);
            let actual = stdout(&o) + &stderr(&o);
            assert_eq!(actual, expected, "transcript for `{cmd}`");
            checked += 1;
        }
    };
    for line in text.lines() {
        if line.starts_with("```") {
            flush(&mut current);
            in_fence = !in_fence;
            continue;
        }
        if !in_fence {
            continue;
        }
        if let Some(cmd) = line.strip_prefix("$ ") {
            flush(&mut current);
            current = Some((cmd.to_owned(), String::new()));
        } else if let Some((_, expected)) = current.as_mut() {
            expected.push_str(line);
            expected.push('\n');
        }
    }
    assert_eq!(checked, 5);
}
