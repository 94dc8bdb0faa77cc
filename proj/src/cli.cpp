#include "eexact/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "eexact/json_io.hpp"

namespace eexact {

namespace {

struct Flags {
  std::string in;
  std::string primes = "all";
  int trials = 200;
  std::uint64_t seed = 0;
  bool json = false;
};

struct Outcome {
  int exit = 0;
  Json result = Json::object();
  Json certificates = Json::object();
  Json violations = Json::array();
  std::string text;
};

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path);
  if (!f) fail(ErrorKind::BadInput, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string complex_text(const CochainComplex& c) {
  std::string s;
  if (c.pad_left) s += "0 -> ";
  s += module_name(c.module_at(0));
  for (int j = 0; j < c.maps(); ++j) s += " -> " + module_name(c.module_at(j + 1));
  if (c.pad_right) s += " -> 0";
  return s;
}

std::string yesno(bool v) { return v ? "yes" : "no"; }

Outcome do_canon(const Flags& fl) {
  Document d = parse_document(read_input(fl.in));
  Outcome oc;
  switch (d.kind) {
    case Document::Kind::Module:
      oc.result = Json{{"document", module_document(d.module)}, {"name", module_name(d.module)}};
      oc.text = module_name(d.module) + "\n";
      break;
    case Document::Kind::Morphism:
      oc.result = Json{{"document", morphism_document(d.morphism)},
                       {"name", module_name(d.morphism.source) + " -> " + module_name(d.morphism.target)}};
      oc.text = module_name(d.morphism.source) + " -> " + module_name(d.morphism.target) + "\n";
      break;
    case Document::Kind::Complex:
      oc.result = Json{{"document", complex_document(d.complex)}, {"name", complex_text(d.complex)}};
      oc.text = complex_text(d.complex) + "\n";
      break;
    case Document::Kind::Diagram:
      oc.result = Json{{"document", diagram_document(d.diagram)},
                       {"name", std::to_string(d.diagram.rows.size()) + " rows x " +
                                    std::to_string(d.diagram.rows[0].maps() + 1) + " columns"}};
      oc.text = "diagram: " + std::to_string(d.diagram.rows.size()) + " rows x " +
                std::to_string(d.diagram.rows[0].maps() + 1) + " columns\n";
      break;
  }
  return oc;
}

Outcome do_snf(const Flags& fl) {
  Document d = parse_document(read_input(fl.in));
  IntMatrix A;
  if (d.kind == Document::Kind::Module)
    A = d.from_presentation ? d.relations : transpose(relation_matrix(d.module));
  else if (d.kind == Document::Kind::Morphism)
    A = d.morphism.matrix;
  else
    fail(ErrorKind::BadInput, "snf expects a module or morphism document");
  SnfDecomposition s = snf(A);
  Json diagj = Json::array();
  std::string diagtext;
  std::vector<Int> diagonal = snf_diagonal(A);
  for (const Int& v : diagonal) {
    diagj.push_back(v.fits_slong_p() ? Json(static_cast<std::int64_t>(v.get_si())) : Json(v.get_str()));
    if (!diagtext.empty()) diagtext += ", ";
    diagtext += v.get_str();
  }
  Outcome oc;
  oc.result = Json{{"U", matrix_json(s.U)},
                   {"D", matrix_json(s.D)},
                   {"V", matrix_json(s.V)},
                   {"diagonal", diagj},
                   {"rank", rank_of(A)}};
  oc.certificates = Json{{"decomposition_checked", mul(mul(s.U, A), s.V) == s.D}};
  oc.text = "diagonal: " + (diagtext.empty() ? std::string("(empty)") : diagtext) + "\nrank: " +
            std::to_string(rank_of(A)) + "\n";
  return oc;
}

Outcome do_essential(const Flags& fl) {
  Document d = parse_document(read_input(fl.in));
  Submodule S{zero_module(RingSpec::integers()), {}};
  FgModule M = zero_module(RingSpec::integers());
  if (d.kind == Document::Kind::Morphism) {
    S = image(d.morphism);
    M = d.morphism.target;
  } else if (d.kind == Document::Kind::Module) {
    M = d.module;
    S = socle(M);  // "is the socle essential": true exactly for finite modules
  } else {
    fail(ErrorKind::BadInput, "essential expects a morphism or module document");
  }
  bool value = is_essential(S, M);
  Outcome oc;
  oc.exit = value ? 0 : 1;
  SubStructure st = submodule_structure(S);
  oc.result = Json{{"essential", value},
                   {"submodule", submodule_json(S)},
                   {"submodule_shape", module_json(st.abs)},
                   {"ambient", module_json(M)}};
  Submodule soc = socle(M);
  oc.certificates = Json{{"full_rank", st.abs.rank() == M.rank()}, {"socle", submodule_json(soc)}};
  for (const Coords& g : soc.generators)
    if (!contains(S, g)) oc.violations.push_back(Json{{"socle_generator_missed", coords_json(g)}});
  oc.text = "essential: " + yesno(value) + "\n";
  return oc;
}

Outcome do_complement(const Flags& fl) {
  Document d = parse_document(read_input(fl.in));
  Submodule S{zero_module(RingSpec::integers()), {}};
  if (d.kind == Document::Kind::Morphism)
    S = image(d.morphism);
  else if (d.kind == Document::Kind::Module)
    S = socle(d.module);
  else
    fail(ErrorKind::BadInput, "complement expects a morphism or module document");
  ComplementResult r = complement(S, static_cast<long>(fl.seed));
  Outcome oc;
  oc.result = Json{{"submodule", submodule_json(S)},
                   {"complement", submodule_json(r.complement)},
                   {"complement_shape", module_json(submodule_structure(r.complement).abs)}};
  oc.certificates = Json{{"meets_trivially", r.meets_trivially}, {"sum_essential", r.sum_essential}};
  oc.text = "complement: " + module_name(submodule_structure(r.complement).abs) +
            "\nmeets trivially: " + yesno(r.meets_trivially) +
            "\nsum essential: " + yesno(r.sum_essential) + "\n";
  return oc;
}

Outcome do_singular(const Flags& fl) {
  Document d = parse_document(read_input(fl.in));
  Outcome oc;
  if (d.kind == Document::Kind::Module) {
    const FgModule& M = d.module;
    Submodule Z = singular_submodule(M);
    Submodule Z2 = z2(M);
    bool singular = is_full_submodule(Z);
    oc.exit = singular ? 0 : 1;
    oc.result = Json{{"singular", singular},
                     {"nonsingular", is_nonsingular(M)},
                     {"z", submodule_json(Z)},
                     {"z_shape", module_json(submodule_structure(Z).abs)},
                     {"z2", submodule_json(Z2)},
                     {"z2_shape", module_json(submodule_structure(Z2).abs)}};
    oc.text = "Z(M) = " + module_name(submodule_structure(Z).abs) +
              "\nZ2(M) = " + module_name(submodule_structure(Z2).abs) +
              "\nsingular: " + yesno(singular) + "\n";
  } else if (d.kind == Document::Kind::Morphism) {
    Submodule K = kernel(d.morphism);
    FgModule Kmod = submodule_structure(K).abs;
    bool singular = is_full_submodule(singular_submodule(Kmod));
    oc.exit = singular ? 0 : 1;
    oc.result = Json{{"singular", singular},
                     {"kernel", submodule_json(K)},
                     {"kernel_shape", module_json(Kmod)}};
    oc.text = "ker = " + module_name(Kmod) + "\nkernel singular: " + yesno(singular) + "\n";
  } else {
    fail(ErrorKind::BadInput, "singular expects a module or morphism document");
  }
  return oc;
}

Outcome do_gabriel_torsion(const Flags& fl) {
  Document d = parse_document(read_input(fl.in));
  if (d.kind != Document::Kind::Module)
    fail(ErrorKind::BadInput, "gabriel-torsion expects a module document");
  GabrielTopology F = parse_primes_flag(fl.primes);
  Submodule T = gabriel_torsion(F, d.module);
  bool torsion = is_gabriel_torsion(F, d.module);
  Outcome oc;
  oc.exit = torsion ? 0 : 1;
  oc.result = Json{{"topology", topology_json(F)},
                   {"torsion_submodule", submodule_json(T)},
                   {"torsion_shape", module_json(submodule_structure(T).abs)},
                   {"torsion", torsion},
                   {"torsionfree", is_gabriel_torsionfree(F, d.module)}};
  oc.text = "t_F(M) = " + module_name(submodule_structure(T).abs) +
            "\nF-torsion: " + yesno(torsion) + "\n";
  return oc;
}

Outcome do_check(const std::string& notion, const Flags& fl) {
  Document d = parse_document(read_input(fl.in));
  if (d.kind != Document::Kind::Complex)
    fail(ErrorKind::BadInput, "check expects a complex document");
  const CochainComplex& c = d.complex;
  GabrielTopology F = parse_primes_flag(fl.primes);

  bool value = false;
  Json positions = Json::array();
  if (notion == "exact" || notion == "e-exact") {
    value = true;
    for (int j : interior_positions(c)) {
      Submodule im = incoming_image(c, j);
      Submodule ker = outgoing_kernel(c, j);
      bool ok = notion == "exact" ? submodule_eq(im, ker) : is_essential_in(im, ker);
      if (!ok) value = false;
      positions.push_back(Json{{"position", j},
                               {"ok", ok},
                               {"cohomology", module_json(cohomology_at(c, j))}});
    }
  } else if (notion == "f-exact") {
    value = true;
    for (int j : interior_positions(c)) {
      FgModule H = cohomology_at(c, j);
      bool ok = is_gabriel_torsion(F, H);
      if (!ok) value = false;
      positions.push_back(Json{{"position", j}, {"ok", ok}, {"cohomology", module_json(H)}});
    }
  } else {
    value = true;
    for (int j : interior_positions(c)) {
      bool ok = is_spec_exact_at(c, j, static_cast<long>(fl.seed));
      if (!ok) value = false;
      positions.push_back(Json{{"position", j}, {"ok", ok}});
    }
  }
  Outcome oc;
  oc.exit = value ? 0 : 1;
  oc.result = Json{{"notion", notion}, {"value", value}, {"positions", positions}};
  for (const Json& p : positions)
    if (!p["ok"].get<bool>()) oc.violations.push_back(p);
  oc.text = notion + ": " + yesno(value) + "\n";
  return oc;
}

Outcome do_localize(const Flags& fl) {
  Document d = parse_document(read_input(fl.in));
  GabrielTopology F = parse_primes_flag(fl.primes);
  Outcome oc;
  if (d.kind == Document::Kind::Module) {
    LocalizedModule L = localize_module(d.module, F);
    oc.result = Json{{"localized", localized_module_json(L)}, {"zero", L.is_zero()}};
    std::string inv;
    for (const Int& v : L.invariants) inv += (inv.empty() ? "" : ", ") + v.get_str();
    oc.text = "localized invariants: " + (inv.empty() ? std::string("(zero module)") : inv) + "\n";
  } else if (d.kind == Document::Kind::Morphism) {
    LocalizedMorphism f = localize_morphism(d.morphism, F);
    Json rows = Json::array();
    for (int i = 0; i < f.target.size(); ++i) {
      Json row = Json::array();
      for (int j = 0; j < f.source.size(); ++j) row.push_back(f.at(i, j).get_str());
      rows.push_back(std::move(row));
    }
    bool iso = is_localized_iso(f);
    oc.result = Json{{"source", localized_module_json(f.source)},
                     {"target", localized_module_json(f.target)},
                     {"matrix", rows},
                     {"iso", iso},
                     {"surjective", is_loc_surjective(d.morphism, F)}};
    oc.text = std::string("localized iso: ") + yesno(iso) + "\n";
  } else if (d.kind == Document::Kind::Complex) {
    bool exact = is_loc_exact(d.complex, F);
    Json mods = Json::array();
    for (int j = 0; j <= d.complex.maps(); ++j)
      mods.push_back(localized_module_json(localize_module(d.complex.module_at(j), F)));
    oc.result = Json{{"modules", mods}, {"loc_exact", exact}};
    oc.exit = exact ? 0 : 1;
    oc.text = "localized complex exact: " + yesno(exact) + "\n";
  } else {
    fail(ErrorKind::BadInput, "localize expects a module, morphism, or complex document");
  }
  return oc;
}

Outcome do_lemma(const std::string& kind_str, const Flags& fl) {
  LemmaKind kind = LemmaKind::Four;
  if (kind_str == "four") kind = LemmaKind::Four;
  else if (kind_str == "five") kind = LemmaKind::Five;
  else if (kind_str == "grid") kind = LemmaKind::Grid;
  else kind = LemmaKind::FourF;
  GabrielTopology F = parse_primes_flag(fl.primes);
  LemmaReport r = check_lemma(kind, fl.trials, fl.seed, F);
  Outcome oc;
  oc.result = lemma_report_json(r);
  std::size_t total = 0;
  for (const LemmaPartStats& p : r.parts) {
    total += p.violations.size();
    for (const LemmaViolation& v : p.violations)
      oc.violations.push_back(Json{{"part", v.part},
                                   {"seed", v.instance_seed},
                                   {"detail", v.detail},
                                   {"diagram", Json::parse(v.diagram_json)}});
  }
  oc.exit = total == 0 ? 0 : 1;
  oc.text = lemma_report_text(r);
  return oc;
}

Outcome do_demo() {
  NoFunctorDemo d = no_functor_demo();
  Outcome oc;
  oc.exit = d.conclusion ? 0 : 1;
  oc.result = no_functor_json(d);
  oc.text = no_functor_text(d);
  return oc;
}

void emit(const std::string& command, const Flags& fl, const Outcome& oc, std::ostream& out) {
  if (!fl.json) {
    out << oc.text;
    return;
  }
  Json env{{"command", command},
           {"inputs", Json{{"in", fl.in.empty() ? Json(nullptr) : Json(fl.in)},
                           {"primes", fl.primes},
                           {"trials", fl.trials},
                           {"seed", fl.seed}}},
           {"result", oc.result},
           {"certificates", oc.certificates},
           {"violations", oc.violations},
           {"seed", fl.seed}};
  out << env.dump() << "\n";
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"relative exactness toolkit for finitely generated Z and Z/n modules"};
  app.name("eexact");
  Flags fl;
  app.add_option("--in", fl.in, "input document file (default: stdin)");
  app.add_option("--primes", fl.primes, "topology: all | none | p1,p2,...");
  app.add_option("--trials", fl.trials, "instances per lemma part");
  app.add_option("--seed", fl.seed, "seed for randomized commands / enumeration order");
  app.add_flag("--json", fl.json, "emit one JSON object instead of text");
  app.fallthrough();
  app.require_subcommand(1);

  app.add_subcommand("canon", "canonicalize a document");
  app.add_subcommand("snf", "normal form of a presentation or morphism matrix");
  app.add_subcommand("essential", "is the image (or socle) essential");
  app.add_subcommand("complement", "certified complement of the image (or socle)");
  app.add_subcommand("singular", "singular submodule Z and Z2 (kernel for morphisms)");
  app.add_subcommand("gabriel-torsion", "is the module F-torsion");
  std::string notion;
  app.add_subcommand("check", "exactness notions on a complex")
      ->add_option("notion", notion, "exact | e-exact | f-exact | spec-exact")
      ->required()
      ->check(CLI::IsMember({"exact", "e-exact", "f-exact", "spec-exact"}));
  app.add_subcommand("localize", "localize a module, morphism, or complex at F");
  std::string lemma_kind;
  app.add_subcommand("lemma", "empirical validation of a homological lemma")
      ->add_option("kind", lemma_kind, "four | five | grid | four-f")
      ->required()
      ->check(CLI::IsMember({"four", "five", "grid", "four-f"}));
  std::string demo_what;
  app.add_subcommand("demo", "guided demonstrations")
      ->add_option("what", demo_what, "no-functor")
      ->required()
      ->check(CLI::IsMember({"no-functor"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error [bad_input]: " << e.what() << "\n";
    return 2;
  }

  std::string command;
  for (const CLI::App* sub : app.get_subcommands()) command = sub->get_name();
  if (command == "check") command += " " + notion;
  if (command == "lemma") command += " " + lemma_kind;
  if (command == "demo") command += " " + demo_what;

  try {
    Outcome oc;
    if (command == "canon") oc = do_canon(fl);
    else if (command == "snf") oc = do_snf(fl);
    else if (command == "essential") oc = do_essential(fl);
    else if (command == "complement") oc = do_complement(fl);
    else if (command == "singular") oc = do_singular(fl);
    else if (command == "gabriel-torsion") oc = do_gabriel_torsion(fl);
    else if (command.rfind("check ", 0) == 0) oc = do_check(notion, fl);
    else if (command == "localize") oc = do_localize(fl);
    else if (command.rfind("lemma ", 0) == 0) oc = do_lemma(lemma_kind, fl);
    else oc = do_demo();
    emit(command, fl, oc, out);
    return oc.exit;
  } catch (const Error& e) {
    int code = e.kind == ErrorKind::SearchExhausted || e.kind == ErrorKind::GenerationExhausted ? 3 : 2;
    if (fl.json) {
      Outcome oc;
      oc.result = Json{{"error", Json{{"kind", kind_name(e.kind)}, {"message", e.what()}}}};
      emit(command, fl, oc, out);
    } else {
      err << "error [" << kind_name(e.kind) << "]: " << e.what() << "\n";
    }
    return code;
  }
}

}  // namespace eexact
