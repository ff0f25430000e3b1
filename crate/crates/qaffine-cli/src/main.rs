fn main() {
    eprintln!("qaffine: command-line interface not wired up yet");
    std::process::exit(1);
}
