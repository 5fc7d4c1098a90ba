#include "polar/vd.hpp"

#include <algorithm>

#include "polar/errors.hpp"
#include "polar/numeric.hpp"

namespace polar {

namespace {

bool all_levels_one(const ArtinianContext& ctx) {
  return std::all_of(ctx.b.begin(), ctx.b.end(), [](unsigned bi) { return bi == 1; });
}

// Levels of other variables that the link-branch ideal no longer reaches:
// the link of x_{i,1} keeps them as cone vertices, so its facets are the
// link-branch facets joined with exactly this set.  (For variable i
// itself the branch always keeps b_i - 1 levels, so nothing pads there
// on honest input; the general form keeps verification meaningful on
// tampered certificates.)
std::vector<PolarVar> link_padding(const ArtinianContext& parent, int var,
                                   const ArtinianContext& branch) {
  std::vector<PolarVar> pad;
  for (int t = 1; t <= parent.n(); ++t) {
    const unsigned hi = parent.b[static_cast<std::size_t>(t - 1)] -
                        (t == var ? 1u : 0u);
    const unsigned lo = branch.b[static_cast<std::size_t>(t - 1)];
    for (unsigned j = lo + 1; j <= hi; ++j) pad.push_back(PolarVar{t, static_cast<int>(j)});
  }
  std::sort(pad.begin(), pad.end());
  return pad;
}

std::vector<PolarVar> expected_cone_chain(const ArtinianContext& ctx, int var) {
  std::vector<PolarVar> chain;
  for (unsigned j = ctx.b[static_cast<std::size_t>(var - 1)]; j >= 2; --j)
    chain.push_back(PolarVar{var, static_cast<int>(j)});
  return chain;
}

}  // namespace

std::pair<MonomialIdeal, MonomialIdeal> derived_ideals(const ArtinianContext& ctx, int var) {
  const int n = ctx.n();
  if (var < 1 || var > n) throw ValidationError("variable index out of range");
  const std::size_t vi = static_cast<std::size_t>(var - 1);
  if (ctx.b[vi] <= 1)
    throw ValidationError("variable exhausted: x" + std::to_string(var) +
                          " has pure-power bound 1");

  // First branch: kill x_var.  A monomial without x_var lies in the ideal
  // iff an x_var-free generator divides it, so the generators are those
  // plus x_var itself.
  std::vector<Monomial> first_gens;
  for (const Monomial& g : ctx.ideal.gens)
    if (g.exp[vi] == 0) first_gens.push_back(g);
  Monomial xvar(static_cast<std::size_t>(n));
  xvar.exp[vi] = 1;
  first_gens.push_back(xvar);
  MonomialIdeal first = minimalize(std::move(first_gens), n);

  // Second branch: divide the standard monomials that x_var divides.  The
  // quotient set T is closed under division, and the minimal monomials
  // outside it all live one step beyond its componentwise maxima, so a
  // bounded box scan recovers the generators.
  std::vector<Monomial> shifted;
  for (const Monomial& u : ctx.standard)
    if (u.exp[vi] >= 1) {
      Monomial w = u;
      --w.exp[vi];
      shifted.push_back(std::move(w));
    }
  std::sort(shifted.begin(), shifted.end(), canonical_less);
  auto in_shifted = [&](const Monomial& m) {
    return std::binary_search(shifted.begin(), shifted.end(), m, canonical_less);
  };

  std::vector<unsigned> box(static_cast<std::size_t>(n), 1);
  for (const Monomial& w : shifted)
    for (int i = 0; i < n; ++i) {
      std::size_t ii = static_cast<std::size_t>(i);
      box[ii] = std::max(box[ii], w.exp[ii] + 2);  // maxima + 1, exclusive bound
    }
  std::vector<Monomial> second_gens;
  // Variables no element of the quotient set touches contribute the
  // generator x_t on their own; keeping them out of the scan keeps the
  // box proportional to the quotient set.
  std::uint64_t cells = 1;
  for (int i = 0; i < n; ++i) {
    std::size_t ii = static_cast<std::size_t>(i);
    bool touched = false;
    for (const Monomial& w : shifted)
      if (w.exp[ii] > 0) {
        touched = true;
        break;
      }
    if (!touched) {
      Monomial xt(static_cast<std::size_t>(n));
      xt.exp[ii] = 1;
      second_gens.push_back(std::move(xt));
      box[ii] = 1;
    }
    cells = checked_mul_u64(cells, box[ii]);
  }
  if (cells > kMaxBoxCells)
    throw ScaleError("derived-ideal scan needs " + std::to_string(cells) +
                     " cells, above the limit " + std::to_string(kMaxBoxCells));
  Monomial m(static_cast<std::size_t>(n));
  while (true) {
    if (!in_shifted(m)) {
      bool minimal = true;
      for (int i = 0; i < n && minimal; ++i) {
        std::size_t ii = static_cast<std::size_t>(i);
        if (m.exp[ii] == 0) continue;
        Monomial down = m;
        --down.exp[ii];
        minimal = in_shifted(down);
      }
      if (minimal) second_gens.push_back(m);
    }
    int i = 0;
    for (; i < n; ++i) {
      std::size_t ii = static_cast<std::size_t>(i);
      if (++m.exp[ii] < box[ii]) break;
      m.exp[ii] = 0;
    }
    if (i == n) break;
  }
  MonomialIdeal second = minimalize(std::move(second_gens), n);
  return {std::move(first), std::move(second)};
}

VDCertificate vd_certificate(const ArtinianContext& ctx) {
  VDCertificate node;
  node.ideal = ctx.ideal;
  if (all_levels_one(ctx)) {
    node.kind = VDCertificate::Kind::LeafTrivial;
    return node;
  }
  int var = 0;
  for (int i = ctx.n(); i >= 1; --i)
    if (ctx.b[static_cast<std::size_t>(i - 1)] > 1) {
      var = i;
      break;
    }
  auto [first, second] = derived_ideals(ctx, var);
  const ArtinianContext del_ctx = build_context(first);
  const ArtinianContext link_ctx = build_context(second);

  node.kind = VDCertificate::Kind::Shed;
  node.vertex = PolarVar{var, 1};
  node.cone_chain = expected_cone_chain(ctx, var);
  node.link_pad = link_padding(ctx, var, link_ctx);
  node.del_child = std::make_unique<VDCertificate>(vd_certificate(del_ctx));
  node.link_child = std::make_unique<VDCertificate>(vd_certificate(link_ctx));
  return node;
}

namespace {

struct NodeCheck {
  VerifyResult result{true, ""};

  bool fail(const std::string& path, const std::string& why) {
    result = VerifyResult{false, path + ": " + why};
    return false;
  }

  bool verify(const VDCertificate& node, const std::string& path) {
    ArtinianContext ctx;
    try {
      ctx = build_context(node.ideal);
    } catch (const std::runtime_error& e) {
      return fail(path, std::string("certificate ideal rejected: ") + e.what());
    }
    const SimplicialComplex cplx = delta_facets(ctx);

    if (node.kind != VDCertificate::Kind::Shed) {
      // Both leaf kinds certify a single-facet complex; the trivial leaf
      // additionally claims that facet is empty.
      if (cplx.facets.size() != 1)
        return fail(path, "leaf for a complex with " +
                              std::to_string(cplx.facets.size()) + " facets");
      if (node.kind == VDCertificate::Kind::LeafTrivial && !cplx.facets.front().empty())
        return fail(path, "trivial leaf for a complex other than {∅}");
      return true;
    }

    if (!node.del_child || !node.link_child)
      return fail(path, "shed node missing a branch");
    const PolarVar v = node.vertex;
    if (!face_contains(cplx.vertices, v))
      return fail(path, "shed vertex " + render(v) + " is not a vertex");
    if (node.cone_chain != expected_cone_chain(ctx, v.var))
      return fail(path, "cone chain does not list the upper levels of x" +
                            std::to_string(v.var));

    const SimplicialComplex del = deletion_of(cplx, v);
    const SimplicialComplex lnk = link_of(cplx, v);

    // (i) shedding: deleting v must not expose new facets.
    for (const Face& f : del.facets)
      if (!std::binary_search(cplx.facets.begin(), cplx.facets.end(), f))
        return fail(path, "not a shedding vertex: deletion facet " + render(f) +
                              " is not a facet");

    ArtinianContext del_ctx, link_ctx;
    try {
      del_ctx = build_context(node.del_child->ideal);
      link_ctx = build_context(node.link_child->ideal);
    } catch (const std::runtime_error& e) {
      return fail(path, std::string("branch ideal rejected: ") + e.what());
    }

    // (ii) the deletion is the del-branch complex coned over the chain.
    {
      const Face chain(node.cone_chain.rbegin(), node.cone_chain.rend());
      std::vector<Face> expected;
      for (const Face& f : delta_facets(del_ctx).facets)
        expected.push_back(face_union(f, chain));
      std::sort(expected.begin(), expected.end());
      if (expected != del.facets)
        return fail(path, "deletion differs from the coned del-branch complex");
    }

    // (iii) the link, with variable-v levels shifted down by one, is the
    // link-branch complex joined with the padding simplex.
    {
      if (node.link_pad != link_padding(ctx, v.var, link_ctx))
        return fail(path, "link padding does not match the branch ideal");
      const Face pad(node.link_pad.begin(), node.link_pad.end());
      std::vector<Face> relabeled;
      for (const Face& f : lnk.facets) {
        Face r;
        r.reserve(f.size());
        for (PolarVar w : f) {
          if (w.var == v.var) {
            if (w.level <= 1)
              return fail(path, "link facet keeps level 1 of the shed variable");
            r.push_back(PolarVar{w.var, w.level - 1});
          } else {
            r.push_back(w);
          }
        }
        std::sort(r.begin(), r.end());
        relabeled.push_back(std::move(r));
      }
      std::sort(relabeled.begin(), relabeled.end());
      std::vector<Face> expected;
      for (const Face& f : delta_facets(link_ctx).facets)
        expected.push_back(face_union(f, pad));
      std::sort(expected.begin(), expected.end());
      if (expected != relabeled)
        return fail(path, "link differs from the padded link-branch complex");
    }

    return verify(*node.del_child, path + ".del") &&
           verify(*node.link_child, path + ".link");
  }
};

void append_certificate_text(const VDCertificate& node, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  switch (node.kind) {
    case VDCertificate::Kind::LeafTrivial:
      out += pad + "leaf trivial\n";
      return;
    case VDCertificate::Kind::LeafSimplex:
      out += pad + "leaf simplex\n";
      return;
    case VDCertificate::Kind::Shed: {
      out += pad + "shed " + render(node.vertex) + "\n";
      out += pad + "  cone:";
      for (PolarVar v : node.cone_chain) out += " " + render(v);
      out += "\n";
      out += pad + "  del:\n";
      if (node.del_child) append_certificate_text(*node.del_child, indent + 4, out);
      out += pad + "  link: shift x" + std::to_string(node.vertex.var) +
             " levels down 1";
      if (!node.link_pad.empty()) {
        out += ", pad:";
        for (PolarVar v : node.link_pad) out += " " + render(v);
      }
      out += "\n";
      if (node.link_child) append_certificate_text(*node.link_child, indent + 4, out);
      return;
    }
  }
}

}  // namespace

VerifyResult verify_certificate(const SimplicialComplex& cplx, const VDCertificate& cert) {
  ArtinianContext root_ctx;
  try {
    root_ctx = build_context(cert.ideal);
  } catch (const std::runtime_error& e) {
    return VerifyResult{false, std::string("root: certificate ideal rejected: ") + e.what()};
  }
  if (!(delta_facets(root_ctx) == cplx))
    return VerifyResult{false, "root: complex does not match the certificate ideal"};
  NodeCheck checker;
  checker.verify(cert, "root");
  return checker.result;
}

std::string certificate_text(const VDCertificate& cert) {
  std::string out;
  append_certificate_text(cert, 0, out);
  return out;
}

}  // namespace polar
