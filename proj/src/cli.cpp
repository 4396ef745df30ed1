#include "insdel/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "insdel/bounds.hpp"
#include "insdel/channel.hpp"
#include "insdel/codes.hpp"
#include "insdel/concat.hpp"
#include "insdel/core.hpp"
#include "insdel/decode.hpp"
#include "insdel/spheres.hpp"
#include "json.hpp"

namespace insdel {

namespace {

struct Globals {
    std::uint32_t q = 2;
    std::optional<std::uint64_t> seed;
    std::string out_path;
};

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

Seed require_seed(const Globals& g) {
    if (!g.seed) throw UsageError("this command is randomized and needs an explicit --seed");
    return Seed{*g.seed};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string fixed6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    std::string s(buf);
    if (s == "-0.000000") s = "0.000000";
    return s;
}

void print_words(std::ostream& os, const WordSet& words) {
    for (const Word& w : words) os << w.str() << '\n';
}

// ---- curve ----

struct CurveArgs {
    std::string kind;
    double epsilon = 0.0;
    double start = 0.0;
    double stop = 1.0;
    std::size_t steps = 11;
};

void write_curve(std::ostream& os, const CurveArgs& a, std::uint32_t q) {
    if (a.steps < 2) throw UsageError("a curve needs at least 2 steps");
    static const std::vector<std::string> kinds = {"singleton", "gv", "random_q3", "random_binary",
                                                   "zyablov", "insertion_only", "deletion_only", "large_q"};
    if (std::find(kinds.begin(), kinds.end(), a.kind) == kinds.end()) throw UsageError("unknown curve kind '" + a.kind + "'");

    std::optional<ZyablovSolver> solver;
    if (a.kind == "zyablov") solver.emplace(q);

    os << "x,rate_raw,rate_clamped,list_size_class\n";
    for (std::size_t k = 0; k < a.steps; ++k) {
        const double x = k + 1 == a.steps ? a.stop
                                          : a.start + (a.stop - a.start) * static_cast<double>(k) / static_cast<double>(a.steps - 1);
        RatePoint pt;
        try {
            if (a.kind == "singleton") {
                if (x < 0.0 || x > 1.0) throw Error(ErrorKind::domain, "relative distance outside [0, 1]");
                pt = {x, 1.0 - x - a.epsilon, std::clamp(1.0 - x - a.epsilon, 0.0, 1.0), ListSizeClass::constant};
            } else if (a.kind == "gv") {
                pt = {x, gv_lower_rate_raw(q, x), gv_lower_rate(q, x), ListSizeClass::constant};
            } else if (a.kind == "random_q3") {
                pt = random_rate_tau_q3(q, x, a.epsilon);
            } else if (a.kind == "random_binary") {
                pt = random_rate_tau_binary(x, a.epsilon);
            } else if (a.kind == "zyablov") {
                ZyablovResult z = solver->solve(x, a.epsilon);
                pt = {x, z.tau_raw, z.tau, ListSizeClass::polynomial};
            } else if (a.kind == "insertion_only") {
                pt = rate_insertion_only(q, x, a.epsilon);
            } else if (a.kind == "deletion_only") {
                pt = rate_deletion_only(q, x, a.epsilon);
            } else {
                pt = large_q_rate(x, a.epsilon);
            }
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::capacity) throw;
            os << fixed6(x) << ",,,domain_error\n";
            continue;
        }
        os << fixed6(x) << ',' << fixed6(pt.rate_raw) << ',' << fixed6(pt.rate) << ',' << to_string(pt.list_size_class)
           << '\n';
    }
}

// ---- concat ----

FieldVector parse_field_vector(const std::string& text) {
    FieldVector v;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            v.push_back(std::stoull(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw Error(ErrorKind::parse, "bad field element '" + tok + "'");
        }
    }
    return v;
}

std::string join(const FieldVector& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s;
}

FieldVector random_message(const ConcatCode& code, CounterRng& rng) {
    FieldVector m(code.params().K);
    for (auto& x : m) x = rng.uniform(code.params().p);
    return m;
}

nlohmann::ordered_json roundtrip(const ConcatCode& code, Seed seed, std::size_t budget) {
    const ConcatParams& P = code.params();
    CounterRng rng(CounterRng::derive(seed, 0));
    const FieldVector message = random_message(code, rng);
    const Word sent = code.encode_message(message);
    const std::vector<std::size_t> budgets = random_budget_split(budget, P.N, 2 * P.n, CounterRng::derive(seed, 1));
    BlockChannelOutput ch = adversarial_block_channel(sent, P.n, budgets, CounterRng::derive(seed, 2));

    nlohmann::ordered_json j;
    j["seed"] = seed.value;
    j["budget"] = budget;
    j["guaranteed_budget"] = P.budget;
    j["message"] = join(message);
    j["sent"] = sent.str();
    j["received"] = ch.word.str();
    j["distance"] = insdel_distance(sent, ch.word);
    j["good_blocks"] = good_index_count(code, sent, ch.word, ch.segments);
    const std::size_t total = P.n * P.N;
    if (ch.word.size() + P.budget < total || ch.word.size() > total + P.budget) {
        j["decoded"] = false;
        j["contained"] = false;
        j["note"] = "received length outside the decodable range";
        return j;
    }
    ConcatDecodeReport rep = code.decode(ch.word);
    j["decoded"] = true;
    j["contained"] = std::find(rep.candidates.begin(), rep.candidates.end(), sent) != rep.candidates.end();
    j["list_size"] = rep.candidates.size();
    j["windows"] = rep.windows;
    j["position_list_total"] = rep.lists.total_size();
    return j;
}

int exit_for(const Error& e) {
    switch (e.kind()) {
        case ErrorKind::capacity: return exit_capacity;
        case ErrorKind::parse: return exit_usage;
        default: return exit_domain;
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Insertion/deletion code toolkit", "insdel"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("-q,--q", g.q, "alphabet size")->check(CLI::Range(2u, 1u << 30));
    app.add_option("--seed", g.seed, "seed for randomized commands");
    app.add_option("--out", g.out_path, "write output to this file");

    std::ostringstream buf;
    std::function<void()> action;

    // distance
    std::string word_a, word_b;
    auto* distance = app.add_subcommand("distance", "insdel distance between two words")->fallthrough();
    distance->add_option("a", word_a)->required();
    distance->add_option("b", word_b)->required();
    distance->callback([&] {
        action = [&] {
            Alphabet al(g.q);
            buf << insdel_distance(Word::parse(word_a, al), Word::parse(word_b, al)) << '\n';
        };
    });

    // runs
    auto* runs = app.add_subcommand("runs", "run count and (w, t) profile of a word")->fallthrough();
    runs->add_option("word", word_a)->required();
    runs->callback([&] {
        action = [&] {
            Word w = Word::parse(word_a, Alphabet(g.q));
            RunProfile p = run_profile(w);
            buf << "phi=" << p.phi << " w=" << p.w << " t=" << p.t << " repetition=" << (is_repetition(w) ? "true" : "false")
                << '\n';
        };
    });

    // sphere
    std::string sphere_kind = "deletion";
    std::size_t radius = 0;
    bool count_only = false;
    auto* sphere = app.add_subcommand("sphere", "enumerate an insertion or deletion sphere")->fallthrough();
    sphere->add_option("word", word_a)->required();
    sphere->add_option("--kind", sphere_kind)->check(CLI::IsMember({"insertion", "deletion"}));
    sphere->add_option("-z,--radius", radius)->required();
    sphere->add_flag("--count", count_only, "print sizes and closed-form values instead of the words");
    sphere->callback([&] {
        action = [&] {
            Word w = Word::parse(word_a, Alphabet(g.q));
            if (sphere_kind == "insertion") {
                WordSet s = enumerate_insertion_sphere(w, radius);
                if (count_only) {
                    buf << "size=" << s.size() << " closed_form=" << insertion_sphere_size(w.size(), radius, g.q) << '\n';
                } else {
                    print_words(buf, s);
                }
            } else {
                WordSet s = enumerate_deletion_sphere(w, radius);
                if (count_only) {
                    buf << "size=" << s.size();
                    if (!w.empty()) {
                        SphereBounds b = deletion_sphere_bounds(count_runs(w), static_cast<std::int64_t>(radius));
                        buf << " lower=" << b.lower << " upper=" << b.upper;
                    }
                    buf << '\n';
                } else {
                    print_words(buf, s);
                }
            }
        };
    });

    // ball
    std::size_t target_len = 0;
    std::string ball_mode = "fast";
    auto* ball = app.add_subcommand("ball", "length-n words within a radius of a center")->fallthrough();
    ball->add_option("word", word_a)->required();
    ball->add_option("-z,--radius", radius)->required();
    ball->add_option("-n,--length", target_len)->required();
    ball->add_option("--mode", ball_mode)->check(CLI::IsMember({"fast", "oracle"}));
    ball->add_flag("--count", count_only);
    ball->callback([&] {
        action = [&] {
            BallQuery query{Word::parse(word_a, Alphabet(g.q)), radius, target_len};
            WordSet s = enumerate_ball_fixed_length(query, ball_mode == "fast" ? BallMode::fast : BallMode::oracle);
            if (count_only) {
                buf << s.size() << '\n';
            } else {
                print_words(buf, s);
            }
        };
    });

    // curve
    CurveArgs curve_args;
    auto* curve = app.add_subcommand("curve", "emit a rate curve as CSV")->fallthrough();
    curve->add_option("--kind", curve_args.kind)->required();
    curve->add_option("--epsilon", curve_args.epsilon);
    curve->add_option("--start", curve_args.start)->required();
    curve->add_option("--stop", curve_args.stop)->required();
    curve->add_option("--steps", curve_args.steps)->required();
    curve->callback([&] { action = [&] { write_curve(buf, curve_args, g.q); }; });

    // gv-greedy
    std::size_t len_n = 0, dist_d = 0;
    auto* greedy = app.add_subcommand("gv-greedy", "greedy code with minimum insdel distance d")->fallthrough();
    greedy->add_option("-n,--length", len_n)->required();
    greedy->add_option("-d,--distance", dist_d)->required();
    greedy->callback([&] { action = [&] { buf << code_to_json(greedy_gv_code(g.q, len_n, dist_d)) << '\n'; }; });

    // sample
    std::uint64_t code_size = 0;
    std::optional<std::size_t> dimension;
    auto* sample = app.add_subcommand("sample", "sample a random (or random linear) code")->fallthrough();
    sample->add_option("-n,--length", len_n)->required();
    sample->add_option("-M,--size", code_size, "number of codewords");
    sample->add_option("-k,--dimension", dimension, "sample a linear code of this dimension");
    sample->callback([&] {
        action = [&] {
            const Seed seed = require_seed(g);
            if (dimension) {
                buf << code_to_json(sample_random_linear_code(g.q, len_n, *dimension, seed).code) << '\n';
            } else {
                if (code_size == 0) throw UsageError("sample needs --size or --dimension");
                buf << code_to_json(sample_random_code(g.q, len_n, code_size, seed)) << '\n';
            }
        };
    });

    // digest
    std::string code_path;
    auto* digest = app.add_subcommand("digest", "SHA-256 of a code's canonical form")->fallthrough();
    digest->add_option("code", code_path, "code JSON file")->required();
    digest->callback([&] { action = [&] { buf << code_digest(code_from_json(read_file(code_path))) << '\n'; }; });

    // certify
    std::size_t list_L = 0;
    std::string certify_mode = "exhaustive";
    std::uint64_t samples = 1000;
    auto* certify = app.add_subcommand("certify", "check list decodability of a code")->fallthrough();
    certify->add_option("code", code_path, "code JSON file")->required();
    certify->add_option("-z,--radius", radius)->required();
    certify->add_option("-L,--list", list_L)->required();
    certify->add_option("--mode", certify_mode)->check(CLI::IsMember({"exhaustive", "sampled"}));
    certify->add_option("--samples", samples);
    certify->callback([&] {
        action = [&] {
            CertifyOptions opts;
            if (certify_mode == "sampled") opts = {CertifyMode::sampled, samples, require_seed(g)};
            Certificate c = certify_list_decodable(code_from_json(read_file(code_path)), radius, list_L, opts);
            if (c.ok) {
                buf << "ok centers=" << c.centers_checked << '\n';
            } else {
                buf << "fail witness=" << c.witness->str() << " count=" << c.witness_count << '\n';
            }
        };
    });

    // experiment
    double gamma = 0.0, kappa = 0.0, epsilon = 0.1;
    std::size_t trials = 10;
    auto* experiment = app.add_subcommand("experiment", "Monte Carlo list-decodability check of random codes")->fallthrough();
    experiment->add_option("-n,--length", len_n)->required();
    experiment->add_option("--gamma", gamma);
    experiment->add_option("--kappa", kappa);
    experiment->add_option("--epsilon", epsilon);
    experiment->add_option("--trials", trials);
    experiment->add_option("--samples", samples);
    experiment->callback([&] {
        action = [&] {
            buf << experiment_report_json(
                       monte_carlo_rate_experiment(g.q, len_n, gamma, kappa, epsilon, trials, require_seed(g), samples))
                << '\n';
        };
    });

    // channel
    std::size_t n_ins = 0, n_del = 0;
    auto* channel = app.add_subcommand("channel", "pass a word through a random insdel channel")->fallthrough();
    channel->add_option("word", word_a)->required();
    channel->add_option("--ins", n_ins);
    channel->add_option("--del", n_del);
    channel->callback([&] {
        action = [&] {
            ChannelOutput o = random_channel(Word::parse(word_a, Alphabet(g.q)), n_ins, n_del, require_seed(g));
            buf << o.word.str() << '\n' << script_to_json(o.script) << '\n';
        };
    });

    // concat-encode / concat-decode / concat-roundtrip
    std::string params_path, message_text;
    auto* cenc = app.add_subcommand("concat-encode", "encode an outer message with the concatenated code")->fallthrough();
    cenc->add_option("--params", params_path)->required();
    cenc->add_option("--message", message_text, "comma-separated field elements; random when omitted");
    cenc->callback([&] {
        action = [&] {
            ConcatCode code(concat_params_from_json(read_file(params_path)));
            FieldVector m;
            if (message_text.empty()) {
                CounterRng rng(require_seed(g));
                m = random_message(code, rng);
            } else {
                m = parse_field_vector(message_text);
            }
            buf << code.encode_message(m).str() << '\n';
        };
    });

    auto* cdec = app.add_subcommand("concat-decode", "list decode a received word")->fallthrough();
    cdec->add_option("--params", params_path)->required();
    cdec->add_option("word", word_a)->required();
    cdec->callback([&] {
        action = [&] {
            ConcatParams params = concat_params_from_json(read_file(params_path));
            ConcatCode code(params);
            ConcatDecodeReport rep = code.decode(Word::parse(word_a, Alphabet(params.q)));
            nlohmann::ordered_json j;
            j["windows"] = rep.windows;
            j["position_list_total"] = rep.lists.total_size();
            j["messages"] = nlohmann::ordered_json::array();
            for (const auto& m : rep.messages) j["messages"].push_back(join(m));
            j["candidates"] = nlohmann::ordered_json::array();
            for (const auto& w : rep.candidates) j["candidates"].push_back(w.str());
            buf << j.dump(2) << '\n';
        };
    });

    std::optional<std::size_t> budget;
    auto* croundtrip = app.add_subcommand("concat-roundtrip", "encode, corrupt and decode one random message")->fallthrough();
    croundtrip->add_option("--params", params_path)->required();
    croundtrip->add_option("--budget", budget, "total edits; defaults to the guaranteed radius");
    croundtrip->callback([&] {
        action = [&] {
            ConcatCode code(concat_params_from_json(read_file(params_path)));
            buf << roundtrip(code, require_seed(g), budget.value_or(code.params().budget)).dump(2) << '\n';
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    try {
        if (!action) throw UsageError("no command given");
        action();
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const Error& e) {
        err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
        return exit_for(e);
    }

    if (g.out_path.empty()) {
        out << buf.str();
    } else {
        std::ofstream f(g.out_path, std::ios::binary);
        if (!f) {
            err << "error: cannot write " << g.out_path << '\n';
            return exit_usage;
        }
        f << buf.str();
    }
    return exit_ok;
}

}  // namespace insdel
