#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "pahyper/config.hpp"
#include "pahyper/gen_g.hpp"
#include "pahyper/io.hpp"
#include "pahyper/modularity.hpp"

using namespace pahyper;

namespace {

Hypergraph read(const std::string& text) {
  std::istringstream in(text);
  return read_hypergraph(in);
}

Config config(const std::string& text) {
  std::istringstream in(text);
  return Config::parse(in, "test.cfg");
}

}  // namespace

TEST(HyperedgeList, ReadsMultiplicity) {
  const auto h = read("0 1 2\n0 0\n");
  EXPECT_EQ(h.num_vertices(), 3u);
  ASSERT_EQ(h.num_edges(), 2u);
  EXPECT_EQ(h.edge_size(1), 2u);
  EXPECT_EQ(h.degree(0), 3u);
}

TEST(HyperedgeList, HeaderKeepsIsolatedVertices) {
  const auto h = read("#vertices 5\n");
  EXPECT_EQ(h.num_vertices(), 5u);
  EXPECT_EQ(h.num_edges(), 0u);
  EXPECT_EQ(read("# a comment\n\n3 1\n").num_vertices(), 4u);
}

TEST(HyperedgeList, MalformedLinesNameTheLine) {
  try {
    read("0 1\n2 x\n");
    FAIL() << "expected an error";
  } catch (const std::runtime_error& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
  EXPECT_THROW(read("0 -1\n"), std::runtime_error);
  EXPECT_THROW(read("#vertices 2\n0 5\n"), std::runtime_error);
}

TEST(HyperedgeList, RoundTripOfGeneratedModel) {
  GParams p;
  p.p = 0.3;
  p.M = {0.6, 0.4};
  p.profile = InterCommunityProfile::diagonal(2, 0.2);
  p.x_dists = {CardinalityDistribution::uniform_int(1, 3), CardinalityDistribution::constant(2)};
  p.gamma = 1.0;
  p.steps = 10000;
  const auto g = generate_g(p, 9).graph;

  const auto dir = std::filesystem::temp_directory_path() / "pahyper_io_test";
  std::filesystem::create_directories(dir);
  write_hypergraph(g, dir / "g.txt");
  write_communities(g.communities(), dir / "g.labels");
  const auto back = parse_hypergraph(dir / "g.txt");
  const auto labels = parse_communities(dir / "g.labels", back.num_vertices());
  std::filesystem::remove_all(dir);

  EXPECT_EQ(back.num_vertices(), g.num_vertices());
  EXPECT_EQ(degree_histogram(back).counts, degree_histogram(g).counts);
  const Partition part(labels);
  EXPECT_EQ(hypergraph_modularity_score(back, part).score,
            hypergraph_modularity_score(g, Partition(g.communities())).score);
  const auto relabeled = with_communities(back, labels);
  for (CommunityId j = 0; j < 2; ++j) {
    EXPECT_EQ(degree_histogram(relabeled, j).counts, degree_histogram(g, j).counts);
  }
}

TEST(CommunityFile, ReadsAndValidates) {
  std::istringstream ok("0\t0\n1\t1\n");
  EXPECT_EQ(read_communities(ok), (std::vector<std::uint32_t>{0, 1}));
  std::istringstream gap("0\t0\n2\t1\n");
  try {
    read_communities(gap);
    FAIL() << "expected an error";
  } catch (const std::runtime_error& e) {
    EXPECT_NE(std::string(e.what()).find("vertex 1"), std::string::npos);
  }
  std::istringstream twice("0\t0\n0\t1\n");
  EXPECT_THROW(read_communities(twice), std::runtime_error);
  std::istringstream short_file("0\t0\n");
  EXPECT_THROW(read_communities(short_file, 3), std::runtime_error);
}

TEST(Config, HParamsSchema) {
  const auto cfg = config(
      "p_v = 0.2\np_ve = 0.3\np_e.1 = 0.1\np_e.2 = 0.4\n"
      "y = uniform:2:4\nx.1 = const:3\nx.2 = poisson:1.5:2\nm = 2\ngamma = 1.5\nsteps = 100\n");
  const auto h = hparams_from_config(cfg);
  cfg.check_all_used();
  EXPECT_EQ(h.p_e, (std::vector<double>{0.1, 0.4}));
  EXPECT_EQ(h.x_dists.size(), 2u);
  EXPECT_EQ(h.m, 2u);
  EXPECT_DOUBLE_EQ(h.y_dist.mean(), 3.0);
}

TEST(Config, GParamsWithProfileLines) {
  const auto cfg = config(
      "p = 0.4\nM = 0.5, 0.3, 0.2\nx.1 = const:1\nx.2 = const:2\nx.3 = const:3\ngamma = 2\n"
      "0 : 0.3\n1 : 0.3\n2 : 0.2\n0,1 : 0.1\n1,2 : 0.05\n0,1,2 : 0.05\n");
  const auto g = gparams_from_config(cfg);
  cfg.check_all_used();
  EXPECT_EQ(g.num_communities(), 3u);
  EXPECT_NEAR(g.profile.probability({0, 1, 2}), 0.05, 1e-15);
  EXPECT_EQ(g.profile.max_set_size(), 3u);
}

TEST(Config, DiagonalProfileKey) {
  const auto cfg = config("p = 0.1\nM = 0.25,0.25,0.25,0.25\nedge_size = const:2\nprofile = diagonal:0.2\n");
  const auto g = gparams_from_config(cfg);
  cfg.check_all_used();
  EXPECT_NEAR(g.profile.probability({1}), 0.2, 1e-15);
  EXPECT_TRUE(g.edge_size.has_value());
}

TEST(Config, ErrorsNameTheKey) {
  const auto unknown = config("p_v = 1\ncolour = blue\n");
  hparams_from_config(unknown);
  try {
    unknown.check_all_used();
    FAIL() << "expected an error";
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("colour"), std::string::npos);
  }
  try {
    hparams_from_config(config("p_v = lots\n"));
    FAIL() << "expected an error";
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("p_v"), std::string::npos);
  }
  EXPECT_THROW(config("p_v = 1\np_v = 2\n"), ConfigError);
  EXPECT_THROW(config("just words\n"), ConfigError);
  EXPECT_THROW(hparams_from_config(config("p_v = 0.9\np_ve = 0.9\n")), ConfigError);
  EXPECT_THROW(gparams_from_config(config("p = 0.5\nM = 1\n0 : 0.5\n")), ConfigError);
}
