#include "pfa/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <string>

#include "pfa/attack.hpp"
#include "pfa/clusters.hpp"
#include "pfa/decrypt.hpp"
#include "pfa/encrypt.hpp"
#include "pfa/io.hpp"
#include "pfa/keygen.hpp"
#include "pfa/power_search.hpp"

namespace pfa {

namespace {

// "7" or "2..6", both inclusive
std::pair<int, int> parse_range(const std::string& text) {
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            int v = std::stoi(text);
            return {v, v};
        }
        int lo = std::stoi(text.substr(0, dots));
        int hi = std::stoi(text.substr(dots + 2));
        return {lo, hi};
    } catch (const std::exception&) {
        throw ParamError("bad range '" + text + "' (expected K or A..B)");
    }
}

struct KeygenArgs {
    int states = 8;
    int word_len = 10;
    std::uint64_t seed = 0;
    int max_retries = 64;
    std::string pub_path, priv_path;
};

struct EncryptArgs {
    std::string pub_path, in_path, out_path;
    std::uint64_t seed = 0;
    std::string noise = "0";
    bool extended = false;
    int clusters = 0;
    std::string cluster_size = "2..4";
    std::string extra_states = "1";
};

struct DecryptArgs {
    std::string cipher_path, priv_path, out_path;
};

struct CheckArgs {
    std::string pfa_path, word;
};

struct AttackArgs {
    std::string pub_path, cipher_path, mode = "word";
    std::uint64_t budget = 1'000'000;
};

struct InspectArgs {
    std::string pfa_path, dot_path;
    bool clusters = false;
};

int run_keygen(const KeygenArgs& args, std::ostream& out) {
    KeyGenParams params;
    params.state_count = args.states;
    params.word_length = args.word_len;
    params.seed = args.seed;
    params.max_retries = args.max_retries;
    KeyPair kp = generate_keypair(params);
    auto report = validate_keypair(kp);
    if (!report.ok()) {
        for (const auto& f : report.failures) out << "invalid: " << f << "\n";
        return 1;
    }
    save_pfa_file(kp.public_key, args.pub_path);
    save_word_file(kp.private_key, args.priv_path);
    out << "public key: " << args.pub_path << " (" << kp.public_key.state_count()
        << " states)\n";
    out << "private key: " << args.priv_path << " ("
        << word_to_string(kp.private_key) << ")\n";
    return 0;
}

int run_encrypt(const EncryptArgs& args, std::ostream& out) {
    Pfa pub = load_pfa_file(args.pub_path);
    Bits u = load_bits_file(args.in_path);

    EncryptionParams params;
    params.seed = args.seed;
    auto noise = parse_range(args.noise);
    params.noise_min = noise.first;
    params.noise_max = noise.second;
    params.extended = args.extended;
    if (args.extended) {
        params.cluster_count = args.clusters;
        auto cs = parse_range(args.cluster_size);
        params.cluster_size_min = cs.first;
        params.cluster_size_max = cs.second;
        auto ks = parse_range(args.extra_states);
        params.added_min = ks.first;
        params.added_max = ks.second;
    }
    Ciphertext c = encrypt(pub, u, params);
    save_pfa_file(c.automaton, args.out_path);
    out << "ciphertext: " << args.out_path << " ("
        << c.automaton.state_count() << " states, " << u.size() << " bits)\n";
    return 0;
}

int run_decrypt(const DecryptArgs& args, std::ostream& out) {
    Pfa cipher = load_pfa_file(args.cipher_path);
    Word w = load_word_file(args.priv_path);
    Bits u = decrypt(cipher, w);
    save_bits_file(u, args.out_path);
    out << "plaintext: " << args.out_path << " (" << u.size() << " bits)\n";
    return 0;
}

int run_check(const CheckArgs& args, std::ostream& out) {
    Pfa a = load_pfa_file(args.pfa_path);
    Word w = word_from_string(args.word);
    auto landing = is_careful_sync_word(a, w);
    if (!landing) {
        out << "NOT-SYNCHRONIZING\n";
        return 1;
    }
    out << *landing << "\n";
    return 0;
}

int run_attack(const AttackArgs& args, std::ostream& out) {
    Pfa pub = load_pfa_file(args.pub_path);
    if (args.mode == "word") {
        Pfa cipher;
        bool have_cipher = !args.cipher_path.empty();
        if (have_cipher) cipher = load_pfa_file(args.cipher_path);
        auto res = attack_by_word_search(pub, have_cipher ? &cipher : nullptr,
                                         args.budget);
        if (res.status == AttackStatus::Found) {
            out << "decrypting word: " << word_to_string(res.word) << "\n";
            if (res.decrypted)
                out << "plaintext: " << bits_to_string(res.plaintext) << "\n";
        }
        out << res.cost.to_text();
        return res.status == AttackStatus::Found ? 0 : 1;
    }
    Pfa cipher = load_pfa_file(args.cipher_path);
    auto res = attack_by_copy_search(cipher, pub, args.budget);
    if (res.status == AttackStatus::Found)
        out << "plaintext: " << bits_to_string(res.plaintext) << "\n";
    out << res.cost.to_text();
    return res.status == AttackStatus::Found ? 0 : 1;
}

int run_inspect(const InspectArgs& args, std::ostream& out) {
    Pfa a = load_pfa_file(args.pfa_path);
    out << "states " << a.state_count() << "\n";
    out << "alphabet " << a.alphabet().to_string() << "\n";
    out << "transitions " << a.transition_count() << "\n";
    for (Letter x : kAllLetters)
        if (a.has_letter(x))
            out << "total_" << letter_char(x) << " "
                << (a.total(x) ? "yes" : "no") << "\n";
    if (args.clusters) {
        auto analysis = analyze_a_clusters(a);
        int idx = 0;
        for (const auto& c : analysis.clusters) {
            out << "cluster " << idx++ << ": states={";
            bool first = true;
            c.states.for_each([&](int q) {
                out << (first ? "" : ",") << q;
                first = false;
            });
            out << "} center={";
            first = true;
            c.center.for_each([&](int q) {
                out << (first ? "" : ",") << q;
                first = false;
            });
            out << "} depth=" << c.depth;
            for (const auto& b : c.branches) {
                out << " branch={";
                for (std::size_t i = 0; i < b.states.size(); ++i)
                    out << (i ? "," : "") << b.states[i];
                out << "}->" << b.destination;
            }
            out << "\n";
        }
    }
    if (!args.dot_path.empty()) {
        std::ofstream f(args.dot_path, std::ios::binary | std::ios::trunc);
        if (!f) throw ParseError("cannot write '" + args.dot_path + "'");
        f << to_dot(a);
        out << "dot: " << args.dot_path << "\n";
    }
    return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err) {
    CLI::App app{"public-key encryption with carefully synchronizing partial automata"};
    app.require_subcommand(1);

    KeygenArgs kg;
    auto* keygen = app.add_subcommand("keygen", "generate a key pair");
    keygen->add_option("--states", kg.states, "public key states")->required();
    keygen->add_option("--word-len", kg.word_len, "private word length")
        ->required();
    keygen->add_option("--seed", kg.seed, "rng seed")->required();
    keygen->add_option("--pub", kg.pub_path, "public key output file")
        ->required();
    keygen->add_option("--priv", kg.priv_path, "private key output file")
        ->required();
    keygen->add_option("--max-retries", kg.max_retries, "construction retries");

    EncryptArgs en;
    auto* encrypt_cmd = app.add_subcommand("encrypt", "encrypt a bit string");
    encrypt_cmd->add_option("--pub", en.pub_path, "public key file")->required();
    encrypt_cmd->add_option("--in", en.in_path, "plaintext bits file")
        ->required();
    encrypt_cmd->add_option("--seed", en.seed, "rng seed")->required();
    encrypt_cmd->add_option("--out", en.out_path, "ciphertext output file")
        ->required();
    encrypt_cmd->add_option("--noise", en.noise, "per-copy noise edges, K or J..K");
    auto* ext_flag =
        encrypt_cmd->add_flag("--extended", en.extended, "use the extended method");
    encrypt_cmd->add_option("--clusters", en.clusters, "added a-clusters")
        ->needs(ext_flag);
    encrypt_cmd->add_option("--cluster-size", en.cluster_size,
                            "cluster size range A..B")
        ->needs(ext_flag);
    encrypt_cmd->add_option("--extra-states", en.extra_states,
                            "per-copy added states, K or A..B")
        ->needs(ext_flag);

    DecryptArgs de;
    auto* decrypt_cmd = app.add_subcommand("decrypt", "decrypt a ciphertext");
    decrypt_cmd->add_option("--cipher", de.cipher_path, "ciphertext file")
        ->required();
    decrypt_cmd->add_option("--priv", de.priv_path, "private key file")
        ->required();
    decrypt_cmd->add_option("--out", de.out_path, "plaintext output file")
        ->required();

    CheckArgs ch;
    auto* check_cmd =
        app.add_subcommand("check", "test a word for careful synchronization");
    check_cmd->add_option("--pfa", ch.pfa_path, "automaton file")->required();
    check_cmd->add_option("--word", ch.word, "word over {a,b}")->required();

    AttackArgs at;
    auto* attack_cmd = app.add_subcommand("attack", "run a baseline attack");
    attack_cmd->add_option("--pub", at.pub_path, "public key file")->required();
    attack_cmd->add_option("--cipher", at.cipher_path, "ciphertext file");
    attack_cmd->add_option("--budget", at.budget, "search budget")->required();
    attack_cmd->add_option("--mode", at.mode, "word or copy")
        ->check(CLI::IsMember({"word", "copy"}));

    InspectArgs in;
    auto* inspect_cmd = app.add_subcommand("inspect", "describe an automaton");
    inspect_cmd->add_option("--pfa", in.pfa_path, "automaton file")->required();
    inspect_cmd->add_flag("--clusters", in.clusters, "print a-cluster anatomy");
    inspect_cmd->add_option("--dot", in.dot_path, "write a dot graph");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(keygen)) return run_keygen(kg, out);
        if (app.got_subcommand(encrypt_cmd)) return run_encrypt(en, out);
        if (app.got_subcommand(decrypt_cmd)) return run_decrypt(de, out);
        if (app.got_subcommand(check_cmd)) return run_check(ch, out);
        if (app.got_subcommand(attack_cmd)) {
            if (at.mode == "copy" && at.cipher_path.empty()) {
                err << "attack --mode copy needs --cipher\n";
                return 2;
            }
            return run_attack(at, out);
        }
        if (app.got_subcommand(inspect_cmd)) return run_inspect(in, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "no subcommand\n";
    return 2;
}

}  // namespace pfa
