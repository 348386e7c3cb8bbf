#include "elemvar/catalog.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace elemvar {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

size_t parse_size(const std::string& s, const std::string& what) {
  try {
    size_t pos = 0;
    unsigned long v = std::stoul(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("");
    return v;
  } catch (...) {
    throw std::invalid_argument("bad " + what + " '" + s + "'\n" + catalog_text());
  }
}

LieAlgebra single_algebra_from_spec(const std::string& spec, uint32_t p) {
  std::vector<std::string> parts = split(spec, ':');
  const std::string& kind = parts[0];
  auto arg = [&](size_t i) -> const std::string& {
    if (i >= parts.size())
      throw std::invalid_argument("missing argument in algebra spec '" + spec + "'\n" + catalog_text());
    return parts[i];
  };
  if (kind == "gl") return make_gl(parse_size(arg(1), "size"), p);
  if (kind == "sl") return make_sl(parse_size(arg(1), "size"), p);
  if (kind == "sp") return make_sp(parse_size(arg(1), "size"), p);
  if (kind == "un") return make_upper_nil(parse_size(arg(1), "size"), p);
  if (kind == "heis") return make_heisenberg(parse_size(arg(1), "rank"), p);
  if (kind == "abelian") return make_abelian(parse_size(arg(1), "dimension"), p);
  if (kind == "g1n") return make_g1n(parse_size(arg(1), "size"), p);
  if (kind == "unr") {
    std::vector<std::string> rs = split(arg(1), ',');
    if (rs.size() != 2) throw std::invalid_argument("unr expects R,S\n" + catalog_text());
    return make_block_nilradical(parse_size(rs[0], "R"), parse_size(rs[1], "S"), p);
  }
  if (kind == "parab-nilrad") {
    size_t n = parse_size(arg(1), "size");
    const std::string& jspec = arg(2);
    if (jspec.rfind("J=", 0) != 0)
      throw std::invalid_argument("parab-nilrad expects J=a,b,...\n" + catalog_text());
    std::vector<size_t> roots;
    for (const std::string& tok : split(jspec.substr(2), ','))
      if (!tok.empty()) roots.push_back(parse_size(tok, "root index"));
    return make_parabolic_nilradical(n, roots, p);
  }
  if (kind == "gtilde") {
    size_t n = parse_size(arg(1), "size");
    Vec phi(n * n, 0);
    if (parts.size() > 2) {
      if (parts[2].rfind("phi=", 0) != 0)
        throw std::invalid_argument("gtilde expects phi=c0,c1,...\n" + catalog_text());
      std::vector<std::string> cs = split(parts[2].substr(4), ',');
      if (cs.size() != phi.size())
        throw std::invalid_argument("gtilde phi needs " + std::to_string(phi.size()) + " coordinates");
      for (size_t i = 0; i < cs.size(); ++i) phi[i] = parse_size(cs[i], "phi coordinate") % p;
    }
    return make_central_extension_gl(n, phi, p);
  }
  throw std::invalid_argument("unknown algebra spec '" + spec + "'\n" + catalog_text());
}

}  // namespace

std::string catalog_text() {
  return
      "algebra specs:\n"
      "  gl:N                 general linear algebra of N x N matrices\n"
      "  sl:N                 trace-zero subalgebra\n"
      "  sp:N                 symplectic algebra (N even), form [[0,I],[-I,0]]\n"
      "  un:N                 strictly upper triangular matrices in gl_N\n"
      "  unr:R,S              the R x S block u_{R,S} inside gl_{R+S}\n"
      "  parab-nilrad:N:J=a,b nilradical of the gl_N parabolic keeping roots J\n"
      "  heis:N               Heisenberg algebra of dimension 2N-1\n"
      "  abelian:N            N-dimensional abelian algebra, zero p-operation\n"
      "  gtilde:N[:phi=c,...] central extension of gl_N twisted by phi\n"
      "  g1n:N                defining rep semidirect gl_N\n"
      "  A+B                  direct sum of algebra specs\n"
      "module specs (relative to --algebra):\n"
      "  triv | defining | adjoint | free:R,A | dual:<m> | tensor:<m>,<m>\n"
      "  sum:<m>,<m> | file:<path.json>\n"
      "within specs: all | nilradical | subalgebra:<algebra spec>\n";
}

LieAlgebra algebra_from_spec(const std::string& spec, uint32_t p) {
  std::vector<std::string> summands = split(spec, '+');
  if (summands.size() == 1) return single_algebra_from_spec(summands[0], p);
  std::vector<LieAlgebra> parts;
  parts.reserve(summands.size());
  for (const std::string& s : summands) parts.push_back(single_algebra_from_spec(s, p));
  return direct_sum(parts);
}

Module module_from_spec(const std::string& spec, const LieAlgebra& g) {
  if (spec == "triv") return Module::trivial(g);
  if (spec == "defining") return Module::defining(g);
  if (spec == "adjoint") return Module::adjoint(g);
  auto colon = spec.find(':');
  std::string kind = colon == std::string::npos ? spec : spec.substr(0, colon);
  std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (kind == "free") {
    std::vector<std::string> ra = split(rest, ',');
    if (ra.size() != 2) throw std::invalid_argument("free expects R,A\n" + catalog_text());
    size_t r = parse_size(ra[0], "R"), a = parse_size(ra[1], "A");
    if (g.dim() != r || g.name() != "abelian:" + std::to_string(r))
      throw std::invalid_argument("free:R,A needs --algebra abelian:R");
    return free_module(g, a);
  }
  if (kind == "dual") return module_from_spec(rest, g).dual();
  if (kind == "tensor" || kind == "sum") {
    std::vector<std::string> args = split(rest, ',');
    if (args.size() != 2)
      throw std::invalid_argument(kind + " expects two comma-separated module specs");
    Module a = module_from_spec(args[0], g);
    Module b = module_from_spec(args[1], g);
    Module out = kind == "tensor" ? a.tensor(b) : a.direct_sum(b);
    out.validate();
    return out;
  }
  if (kind == "file") {
    std::ifstream in(rest);
    if (!in) throw std::invalid_argument("cannot open module file " + rest);
    nlohmann::json j;
    in >> j;
    size_t d = j.at("dim").get<size_t>();
    const auto& ops_json = j.at("ops");
    if (ops_json.size() != g.dim())
      throw std::invalid_argument("module file needs one operator per algebra basis vector");
    std::vector<Matrix> ops;
    for (const auto& mj : ops_json) {
      Matrix m(d, d, g.modulus());
      if (mj.size() != d) throw std::invalid_argument("module file operator has wrong row count");
      for (size_t i = 0; i < d; ++i) {
        if (mj[i].size() != d)
          throw std::invalid_argument("module file operator has wrong column count");
        for (size_t k = 0; k < d; ++k) m.set_signed(i, k, mj[i][k].get<int64_t>());
      }
      ops.push_back(std::move(m));
    }
    return Module(g, std::move(ops), "file:" + rest, /*validate_now=*/true);
  }
  throw std::invalid_argument("unknown module spec '" + spec + "'\n" + catalog_text());
}

std::optional<Subspace> within_from_spec(const std::string& spec, const LieAlgebra& g) {
  if (spec.empty() || spec == "all") return std::nullopt;
  if (spec == "nilradical") {
    if (!g.borel_nilradical())
      throw std::invalid_argument(g.name() + " has no identified Borel nilradical");
    return *g.borel_nilradical();
  }
  if (spec.rfind("subalgebra:", 0) == 0) {
    LieAlgebra sub = algebra_from_spec(spec.substr(11), g.modulus());
    if (!sub.has_realization() || !g.has_realization() ||
        sub.realization_dim() != g.realization_dim())
      throw std::invalid_argument("subalgebra embedding needs matching matrix realizations");
    Matrix cols(g.dim(), sub.dim(), g.modulus());
    for (size_t i = 0; i < sub.dim(); ++i) cols.set_col(i, g.coordinates_of(sub.realization()[i]));
    return Subspace::span(cols);
  }
  throw std::invalid_argument("unknown within spec '" + spec + "'\n" + catalog_text());
}

}  // namespace elemvar
