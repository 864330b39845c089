// Copyright 2026 The FreezeML C++ Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "freezeml/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "freezeml/corpus.hpp"
#include "freezeml/declcheck.hpp"
#include "freezeml/diagnostics.hpp"
#include "freezeml/infer.hpp"
#include "freezeml/parser.hpp"
#include "freezeml/prelude.hpp"
#include "freezeml/printer.hpp"
#include "freezeml/subst.hpp"
#include "freezeml/systemf.hpp"
#include "freezeml/translate.hpp"

namespace freezeml {

namespace {

struct IoError {
  std::string message;
};

struct Flags {
  bool no_prelude = false;
  bool unicode = false;
  bool show_elab = false;
  bool naive = false;
  bool rigid = false;
  std::string file;
  std::string type;
  std::string corpus;

  Charset charset() const { return unicode ? Charset::Unicode : Charset::Ascii; }
  RenderOptions render() const { return RenderOptions{true, charset()}; }
  TypeEnv gamma() const { return no_prelude ? TypeEnv{} : prelude(); }
};

std::string read_source(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError{"cannot read " + path};
  buf << in.rdbuf();
  return buf.str();
}

// Gives residual rigid variables short letter names that clash with nothing
// the output already mentions.
TypeMap letter_names(const std::vector<std::string>& vars,
                     std::vector<std::string> taken) {
  TypeMap m;
  std::size_t next = 0;
  for (const auto& v : vars) {
    std::string cand;
    do {
      cand = std::string(1, static_cast<char>('a' + next % 26));
      if (next >= 26) cand += std::to_string(next / 26);
      ++next;
    } while (std::find(taken.begin(), taken.end(), cand) != taken.end());
    taken.push_back(cand);
    m.set(v, Type::var(cand));
  }
  return m;
}

struct Elaborated {
  FTerm term;
  Type type;
};

Elaborated elaborate(const Flags& f, const Term& m) {
  TypeEnv gamma = f.gamma();
  Elaboration e = rebuild_derivation(KindEnv{}, gamma, m,
                                     f.rigid ? Residuals::Rigid : Residuals::Ground);
  FTerm ft = to_systemf(e.derivation);
  Type t = f_typecheck(e.delta, gamma, ft);
  if (!alpha_eq(t, e.type)) {
    throw Error(ErrorCode::Internal, "elaboration changed the type", {},
                {e.type, t});
  }
  std::vector<std::string> taken;
  collect_type_names(ft, taken);
  collect_names(t, taken);
  TypeMap names = letter_names(e.delta.names(), taken);
  return {apply(names, ft), apply(names, t)};
}

int cmd_parse(const Flags& f, std::ostream& out) {
  Term m = parse_program(read_source(f.file));
  out << render_term(m, f.charset()) << "\n";
  return kExitOk;
}

int cmd_infer(const Flags& f, std::ostream& out) {
  Term m = parse_program(read_source(f.file));
  Type t = infer_top(f.gamma(), m);
  out << render_term(m, f.charset()) << " : " << render_type(t, f.render())
      << "\n";
  if (f.show_elab) {
    Elaborated e = elaborate(f, m);
    out << render_fterm(e.term, f.charset()) << "\n";
  }
  return kExitOk;
}

int cmd_check(const Flags& f, std::ostream& out) {
  Type want = parse_type(f.type);
  Term m = parse_program(read_source(f.file));
  bool ok = check_typing(KindEnv{}, f.gamma(), m, want);
  out << render_term(m, f.charset()) << (ok ? " : " : " /: ")
      << render_type(want, f.render()) << "\n";
  return ok ? kExitOk : kExitTypeError;
}

int cmd_elaborate(const Flags& f, std::ostream& out) {
  Term m = parse_program(read_source(f.file));
  Elaborated e = elaborate(f, m);
  out << render_fterm(e.term, f.charset()) << " : "
      << render_type(e.type, f.render()) << "\n";
  return kExitOk;
}

int cmd_import(const Flags& f, std::ostream& out) {
  FTerm t = parse_fterm(read_source(f.file));
  Term m = from_systemf(KindEnv{}, f.gamma(), t, f.naive);
  out << render_term(m, f.charset()) << "\n";
  return kExitOk;
}

int cmd_golden(const Flags& f, std::ostream& out) {
  std::string text = f.corpus.empty() ? std::string(bundled_corpus())
                                      : read_source(f.corpus);
  std::vector<CorpusRow> rows = parse_corpus(text);
  TypeEnv base = f.gamma();
  std::size_t passed = 0;
  for (const CorpusRow& row : rows) {
    RowOutcome r;
    try {
      r = check_row(row, base);
    } catch (const Error& e) {
      r.got = std::string("error: ") + e.what();
    }
    if (r.pass) ++passed;
    out << (r.pass ? "PASS " : "FAIL ") << row.label << ": " << row.term
        << " : " << r.got;
    if (!r.pass) out << "  (expected " << row.expected.value_or("FAIL") << ")";
    out << "\n";
  }
  out << passed << "/" << rows.size() << " rows passed\n";
  return passed == rows.size() ? kExitOk : kExitTypeError;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"FreezeML type checker and System F translator", "freezeml"};
  app.require_subcommand(1);
  Flags f;
  app.add_flag("--no-prelude", f.no_prelude, "Start from an empty environment");
  auto* ascii = app.add_flag_callback(
      "--ascii", [&f] { f.unicode = false; }, "ASCII output (default)");
  app.add_flag("--unicode", f.unicode, "Unicode output")->excludes(ascii);

  auto* parse = app.add_subcommand("parse", "Parse and print a program");
  parse->add_option("file", f.file, "Source file or -")->required();

  auto* infer = app.add_subcommand("infer", "Infer the principal type");
  infer->add_option("file", f.file, "Source file or -")->required();
  infer->add_flag("--show-elab", f.show_elab, "Also print the System F term");

  auto* check = app.add_subcommand("check", "Check the term against a type");
  check->add_option("file", f.file, "Source file or -")->required();
  check->add_option("--type", f.type, "Candidate type")->required();

  auto* elab = app.add_subcommand("elaborate", "Translate to System F");
  elab->add_option("file", f.file, "Source file or -")->required();
  elab->add_flag("--rigid", f.rigid,
                 "Keep leftover type variables free instead of using Int");

  auto* import = app.add_subcommand("import", "Translate a System F term");
  import->add_option("file", f.file, "System F source file or -")->required();
  import->add_flag("--naive", f.naive,
                   "Omit the instantiation on type application (unsound)");

  auto* golden = app.add_subcommand("golden", "Run the golden corpus");
  golden->add_option("--corpus", f.corpus, "Corpus file instead of the bundled one");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::string file_label = f.file.empty() ? "<corpus>" : f.file;
  try {
    if (parse->parsed()) return cmd_parse(f, out);
    if (infer->parsed()) return cmd_infer(f, out);
    if (check->parsed()) return cmd_check(f, out);
    if (elab->parsed()) return cmd_elaborate(f, out);
    if (import->parsed()) return cmd_import(f, out);
    if (golden->parsed()) return cmd_golden(f, out);
  } catch (const IoError& e) {
    err << "freezeml: " << e.message << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << format_diagnostic(file_label, e) << "\n";
    return is_syntax_error(e.code()) ? kExitUsage : kExitTypeError;
  }
  return kExitUsage;
}

}  // namespace freezeml
