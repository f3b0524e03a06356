use std::io::{BufRead, BufReader, Cursor};
use std::process::{Command, Stdio};

fn run(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut input = Cursor::new(stdin.as_bytes().to_vec());
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("hangman").chain(args.iter().copied());
    let code = hangman_cli::run(argv, &mut input, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn five_word_file(dir: &tempfile::TempDir) -> String {
    let path = dir.path().join("five.txt");
    std::fs::write(&path, "# five words\nabbc\nabcb\nabcc\ndddd\neeee\n").unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn solve_prints_value() {
    let dir = tempfile::tempdir().unwrap();
    let (code, out, _) = run(&["solve", "--lexicon", &five_word_file(&dir)], "");
    assert_eq!(code, 0);
    assert_eq!(out.lines().next(), Some("value=2"));
    assert!(out.contains("line=a:{} d:{} e:{1,2,3,4}"));

    let (code, out, _) = run(&["solve", "--lexicon", "graph:k4", "--json"], "");
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["value"], 0);
}

#[test]
fn eval_greedy_is_zero_on_family() {
    let (code, out, _) = run(&["eval-greedy", "--lexicon", "adversarial:m=3"], "");
    assert_eq!(code, 0);
    assert!(out.starts_with("value=0\n"));
}

#[test]
fn gen_adversarial_writes_five_words() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.txt");
    let (code, out, _) = run(
        &["gen", "adversarial", "-m", "2", "-o", path.to_str().unwrap()],
        "",
    );
    assert_eq!((code, out.as_str()), (0, ""));
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 5);
    // The written file loads back as the same game.
    let (_, out, _) = run(&["solve", "--lexicon", path.to_str().unwrap()], "");
    assert!(out.starts_with("value=2\n"));
}

#[test]
fn verify_commands() {
    let (code, out, _) = run(&["verify", "reduction", "--graph", "petersen"], "");
    assert_eq!((code, out.as_str()), (0, "gamma=3 value=2 ok\n"));
    let (code, out, _) = run(&["verify", "reduction", "--graph", "k33", "-d", "2"], "");
    assert_eq!(
        (code, out.as_str()),
        (0, "gamma=2 value=1 ok\nd=2 equivalence=true\n")
    );
    let (code, out, _) = run(&["verify", "reduction", "--graph", "random:8", "--seed", "4"], "");
    assert_eq!(code, 0, "{out}");

    let (code, out, _) = run(&["verify", "separation", "-m", "2"], "");
    assert_eq!(code, 0);
    assert!(out.contains("greedy=0\noptimal=2\nok=true\n"));
    let (code, out, _) = run(&["verify", "separation", "-m", "1", "--json"], "");
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!((v["optimal"].as_u64(), v["ok"].as_bool()), (Some(1), Some(true)));
}

#[test]
fn encode_graph_outputs_proper_lexicon() {
    let (code, out, _) = run(&["encode-graph", "--graph", "k4"], "");
    assert_eq!(code, 0);
    let lexicon = hangman_core::Lexicon::parse(&out).unwrap();
    assert!(hangman_core::properness_check(&lexicon));
    assert_eq!(lexicon.len(), 4);
}

#[test]
fn play_transcript() {
    let (code, out, _) = run(
        &[
            "play",
            "--lexicon",
            "builtin:fig2",
            "--setter",
            "greedy",
            "-d",
            "0",
        ],
        "a\nb\nc\n",
    );
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "mask=____ failed=0 max_fails=0\na {1} mask=a___ failed=0\nb {2} mask=ab__ failed=0\n\
         c {3,4} mask=abcc failed=0\nstatus=guesser_won word=abcc\n"
    );
    let (_, out, _) = run(
        &[
            "play",
            "--lexicon",
            "builtin:fig2",
            "--setter",
            "optimal",
            "-d",
            "1",
        ],
        "a\nd\n",
    );
    assert!(out.ends_with("d {} mask=____ failed=2\nstatus=setter_won word=eeee\n"));
    let (_, out, _) = run(
        &["play", "--lexicon", "builtin:fig2", "--setter", "greedy"],
        "a\na\nzz\n",
    );
    assert!(out.contains("a: already guessed") && out.contains("zz: not a symbol"));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["solve"], "").0, 2);
    assert_eq!(run(&["frobnicate"], "").0, 2);
    let (code, _, err) = run(&["solve", "--lexicon", "/no/such/file"], "");
    assert_eq!(code, 1);
    assert!(err.starts_with("error:"));
    assert_eq!(run(&["gen", "adversarial", "-m", "0"], "").0, 1);
    assert_eq!(run(&["verify", "reduction", "--graph", "random:30"], "").0, 1);
    assert_eq!(
        run(&["play", "--lexicon", "builtin:fig2", "--setter", "lazy"], "").0,
        1
    );
    assert_eq!(run(&["--help"], "").0, 0);
}

#[test]
fn output_is_deterministic() {
    let cases: &[&[&str]] = &[
        &["solve", "--lexicon", "graph:cube", "--json"],
        &["encode-graph", "--graph", "random:12", "--seed", "9"],
        &["gen", "cubic", "-n", "10", "--seed", "3"],
        &[
            "play",
            "--lexicon",
            "builtin:fig1",
            "--setter",
            "honest",
            "--seed",
            "5",
        ],
    ];
    for args in cases {
        let first = run(args, "e\nu\nn\na\ni\no\n");
        assert_eq!(first, run(args, "e\nu\nn\na\ni\no\n"), "{args:?}");
        assert_eq!(first.0, 0, "{args:?}");
    }
}

#[test]
fn port_flag_beats_environment() {
    let free_port = || {
        std::net::TcpListener::bind("127.0.0.1:0")
            .unwrap()
            .local_addr()
            .unwrap()
            .port()
    };
    let (env_port, flag_port) = (free_port(), free_port());
    let mut child = Command::new(env!("CARGO_BIN_EXE_hangman"))
        .args(["serve", "--port", &flag_port.to_string()])
        .env("HANGMAN_PORT", env_port.to_string())
        .stdout(Stdio::piped())
        .stderr(Stdio::null())
        .spawn()
        .unwrap();
    let mut line = String::new();
    BufReader::new(child.stdout.take().unwrap())
        .read_line(&mut line)
        .unwrap();
    child.kill().unwrap();
    child.wait().unwrap();
    assert_eq!(line.trim(), format!("listening on http://127.0.0.1:{flag_port}"));

    let mut child = Command::new(env!("CARGO_BIN_EXE_hangman"))
        .arg("serve")
        .env("HANGMAN_PORT", env_port.to_string())
        .stdout(Stdio::piped())
        .stderr(Stdio::null())
        .spawn()
        .unwrap();
    let mut line = String::new();
    BufReader::new(child.stdout.take().unwrap())
        .read_line(&mut line)
        .unwrap();
    child.kill().unwrap();
    child.wait().unwrap();
    assert_eq!(line.trim(), format!("listening on http://127.0.0.1:{env_port}"));
}
