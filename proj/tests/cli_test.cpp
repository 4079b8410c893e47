#include "burstctl.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include "test_support.hpp"

namespace burstctl {
namespace {

namespace fs = std::filesystem;
using burst::testing_support::bits;

struct Outcome {
  int code;
  std::string out, err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "burstctl");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("burstctl_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  void write(const std::string& name, const std::string& text) const { write_text(path(name), text); }

  fs::path dir_;
};

TEST_F(Cli, BallPrintsTheSetAndItsSize) {
  const Outcome r = invoke({"ball", "--q", "2", "--t", "2", "--seq", "0101"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{01}\nsize 1\n");
  const Outcome q = invoke({"ball", "--q", "3", "--t", "1", "--seq", "0,1,1,2", "--upto"});
  EXPECT_EQ(q.out, "{0,1,1 0,1,2 1,1,2}\nsize 3\n");
}

TEST_F(Cli, BoundsFirstLineIsTheFloor) {
  EXPECT_EQ(invoke({"bounds", "--n", "4", "--q", "2", "--t", "2"}).out.substr(0, 2), "4\n");
  EXPECT_EQ(invoke({"bounds", "--n", "6", "--q", "2", "--t", "2"}).out.substr(0, 2), "9\n");
  EXPECT_EQ(invoke({"bounds", "--n", "6", "--t", "2", "--perm"}).out.substr(0, 3), "72\n");
  EXPECT_EQ(invoke({"bounds", "--n", "5", "--q", "2", "--t", "2"}).code, 2);
}

TEST_F(Cli, EmptyBookPasses) {
  write("empty.json", R"({"spec":{"family":"vt","n":4},"words":[]})");
  const Outcome r = invoke({"verify", "--book", path("empty.json"), "--t", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(r.out.size() - 5), "pass\n");
  EXPECT_EQ(invoke({"verify", "--book", path("empty.json"), "--t", "2", "--sweep"}).code, 0);
}

TEST_F(Cli, FlagErrorsExitTwo) {
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"ball", "--q", "2", "--seq", "01"}).code, 2);
  EXPECT_EQ(invoke({"ball", "--q", "2", "--t", "0", "--seq", "01"}).code, 2);
  EXPECT_EQ(invoke({"ball", "--q", "2", "--t", "1", "--seq", "012"}).code, 2);
  EXPECT_EQ(invoke({"sieve", "--family", "bch", "--n", "8", "--t", "2", "--out", path("x.json")}).code, 2);
  EXPECT_EQ(invoke({"verify", "--book", path("missing.json"), "--t", "2"}).code, 2);
  EXPECT_EQ(invoke({"encode", "--scheme", "pll", "--t", "3", "--in", path("missing.txt"), "--out", "x"}).code, 2);
  EXPECT_EQ(invoke({"frobnicate"}).code, 2);
  EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST_F(Cli, SieveMatchesTheLibrary) {
  const Outcome r = invoke({"sieve", "--family", "levenshtein", "--n", "10", "--q", "2", "--t", "2", "--out",
                            path("lev.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const burst::Codebook direct = burst::sieve(burst::Family::Levenshtein, 10, 2, 2);
  const burst::Codebook loaded = burst::load_codebook(path("lev.json"));
  EXPECT_EQ(loaded.words, direct.words);
  EXPECT_EQ(burst::codebook_json(loaded), burst::codebook_json(direct));

  ASSERT_EQ(invoke({"sieve", "--family", "perm", "--n", "6", "--t", "2", "--out", path("perm.json")}).code, 0);
  EXPECT_EQ(burst::load_codebook(path("perm.json")).words, burst::sieve(burst::Family::Perm, 6, 6, 2).words);
}

TEST_F(Cli, VerifyPassesSievedCodesAndReportsWitnesses) {
  ASSERT_EQ(invoke({"sieve", "--family", "c2b", "--n", "10", "--q", "4", "--t", "2", "--out", path("c2b.json")}).code,
            0);
  const Outcome ok = invoke({"verify", "--book", path("c2b.json"), "--t", "2", "--sweep", "--jobs", "1"});
  EXPECT_EQ(ok.code, 0) << ok.out;
  EXPECT_EQ(invoke({"verify", "--book", path("c2b.json"), "--t", "2", "--sweep", "--jobs", "3"}).out, ok.out);

  write("clash.json", R"({"spec":{"family":"vt","n":4,"q":2,"t":1},"words":["0011","0101"]})");
  const Outcome bad = invoke({"verify", "--book", path("clash.json"), "--t", "1"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("witness 0011 | 0101 -> 001"), std::string::npos) << bad.out;

  nlohmann::json book = burst::codebook_json(burst::sieve(burst::Family::Levenshtein, 9, 2, 2));
  book["spec"]["params"]["a"] = (book["spec"]["params"]["a"].get<int>() + 1) % 18;
  write("wrong.json", book.dump());
  const Outcome sweep = invoke({"verify", "--book", path("wrong.json"), "--t", "2", "--sweep"});
  EXPECT_EQ(sweep.code, 1);
  EXPECT_NE(sweep.out.find("sweep: fail"), std::string::npos);
}

TEST_F(Cli, DecodeMatchesTheLibrary) {
  ASSERT_EQ(invoke({"sieve", "--family", "levenshtein", "--n", "10", "--t", "2", "--out", path("lev.json")}).code, 0);
  const burst::Codebook book = burst::load_codebook(path("lev.json"));
  for (std::size_t i = 0; i < book.words.size(); i += 5) {
    const Word got = burst::apply_burst(book.words[i], {3, 2});
    const Outcome r = invoke({"decode", "--book", path("lev.json"), "--received", burst::format_word(got, 2)});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, burst::format_word(book.words[i], 2) + "\n");
  }
  EXPECT_EQ(invoke({"decode", "--book", path("lev.json"), "--received", "01"}).code, 2);
  EXPECT_EQ(invoke({"decode", "--book", path("lev.json"), "--received", "01010101", "--window", "1:3"}).code, 2);
}

TEST_F(Cli, WindowedCtbDecoding) {
  ASSERT_EQ(invoke({"sieve", "--family", "ctb", "--n", "16", "--q", "4", "--t", "2", "--delta", "8", "--P", "8",
                    "--out", path("ctb.json")})
                .code,
            0);
  const burst::Codebook book = burst::load_codebook(path("ctb.json"));
  const Word u = book.expand(burst::kDefaultBudget).at(7);
  const Word got = burst::apply_burst(u, {5, 2});
  const Outcome r =
      invoke({"decode", "--book", path("ctb.json"), "--received", burst::format_word(got, 4), "--window", "3:10"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, burst::format_word(u, 4) + "\n");
  EXPECT_EQ(invoke({"decode", "--book", path("ctb.json"), "--received", burst::format_word(got, 4), "--window", "3-10"})
                .code,
            2);

  // Some received word the decoder rejects must exit 1.
  std::mt19937 rng(5);
  bool rejected = false;
  for (int trial = 0; trial < 2000 && !rejected; ++trial) {
    Word w(14);
    for (auto& s : w) s = static_cast<burst::Symbol>(rng() % 4);
    try {
      burst::decode_word(*book.spec, w, burst::Interval{1, 8});
    } catch (const burst::NotDecodable&) {
      rejected = true;
      const Outcome nd =
          invoke({"decode", "--book", path("ctb.json"), "--received", burst::format_word(w, 4), "--window", "1:8"});
      EXPECT_EQ(nd.code, 1);
      EXPECT_NE(nd.err.find("not decodable"), std::string::npos);
    }
  }
  EXPECT_TRUE(rejected);
}

TEST_F(Cli, EncodeWritesVersionedJson) {
  write("in.txt", "1101010101010101\n\n0000000000\n");
  ASSERT_EQ(invoke({"encode", "--scheme", "pll", "--t", "2", "--in", path("in.txt"), "--out", path("out.json")}).code,
            0);
  std::ifstream in(path("out.json"));
  const auto doc = nlohmann::json::parse(in);
  EXPECT_EQ(doc.at("schema_version"), 1);
  ASSERT_EQ(doc.at("words").size(), 2u);
  EXPECT_EQ(doc["words"][0]["output"], "101010110010001011");
  EXPECT_EQ(doc["words"][1]["output"], burst::format_word(burst::pll_encode(bits("0000000000")), 2));

  std::mt19937 rng(3);
  std::string x;
  for (int i = 0; i < 513; ++i) x.push_back(static_cast<char>('0' + rng() % 2));
  write("long.txt", x + "\n");
  ASSERT_EQ(invoke({"encode", "--scheme", "dense", "--t", "1", "--in", path("long.txt"), "--out", path("d.json")}).code,
            0);
  std::ifstream din(path("d.json"));
  const auto dense = nlohmann::json::parse(din);
  const auto dp = burst::DensityParams::standard(513, 1);
  EXPECT_EQ(dense["words"][0]["delta"], dp.delta);
  EXPECT_EQ(burst::dense_decode(bits(dense["words"][0]["output"].get<std::string>()), dp), bits(x));
}

TEST_F(Cli, TableIsDeterministic) {
  const std::vector<std::string> args{"table", "--out", path("a.csv"), "--lengths", "8,10", "--q", "4", "--t", "2"};
  ASSERT_EQ(invoke(args).code, 0);
  std::vector<std::string> again = args;
  again[2] = path("b.csv");
  ASSERT_EQ(invoke(again).code, 0);
  std::ifstream a(path("a.csv")), b(path("b.csv"));
  const std::string ta((std::istreambuf_iterator<char>(a)), {}), tb((std::istreambuf_iterator<char>(b)), {});
  EXPECT_EQ(ta, tb);
  EXPECT_EQ(ta.rfind("# schema_version=1 q=4 t=2\nfamily,alphabet,burst,formula,n,formula_bits,measured_bits\n", 0), 0u);
  const double lev = burst::sieve(burst::Family::Levenshtein, 10, 2, 2).redundancy_bits();
  EXPECT_NE(ta.find("levenshtein,binary,<=2,\"log n + 1\",10,4.322," + burst::format_bits(lev) + "\n"),
            std::string::npos)
      << ta;
}

}  // namespace
}  // namespace burstctl
