#include <algorithm>
#include <fstream>
#include <sstream>

#include "commands.hpp"

namespace painlab::cli {

namespace fs = std::filesystem;

namespace {

struct Schema {
  const char* name;
  const char* header;
  PlotKind default_kind;
  std::vector<PlotKind> kinds;
};

const std::vector<Schema>& schemas() {
  static const std::vector<Schema> s{
      {"lax_residual",
       "z_re,z_im,lambda_re,lambda_im,r1_re,r1_im,r2_re,r2_im,r3_re,r3_im,fro_norm",
       PlotKind::residual,
       {PlotKind::residual}},
      {"pii_trajectory", "z_re,z_im,f_re,f_im,fp_re,fp_im", PlotKind::trajectory,
       {PlotKind::trajectory}},
      {"yukawa_error", "r,V_exact,V_approx,V_approx_consistent,abs_err,rel_err",
       PlotKind::potential,
       {PlotKind::potential, PlotKind::error}},
      {"snapshot", "x,psi_re,psi_im,ansatz_re,ansatz_im,abs_err", PlotKind::comparison,
       {PlotKind::comparison, PlotKind::error}},
      {"spectrum_comparison", "n_radial,l,energy_a,energy_b,abs_diff,rel_diff",
       PlotKind::comparison,
       {PlotKind::comparison, PlotKind::error}},
  };
  return s;
}

std::string quote(const std::string& s) { return "'" + s + "'"; }

std::string preamble(const std::string& data, const std::string& png) {
  std::ostringstream os;
  os << "# gnuplot script; run from the directory holding " << data << "\n"
     << "set datafile separator ','\n"
     << "set terminal pngcairo size 900,600\n"
     << "set output " << quote(png) << "\n"
     << "set grid\n";
  return os.str();
}

std::string body(const std::string& schema, PlotKind kind, const std::string& d) {
  std::ostringstream os;
  const std::string q = quote(d);
  if (schema == "lax_residual") {
    os << "set xlabel 'Re z'\nset ylabel 'Im z'\nset cblabel '||R||_F'\n"
       << "set view map\n"
       << "splot " << q << " every ::1 using 1:2:11 with points pointtype 5 palette notitle\n";
  } else if (schema == "pii_trajectory") {
    os << "set xlabel 'sample'\nset ylabel 'f'\n"
       << "plot " << q << " every ::1 using 0:3 with lines title 'Re f', \\\n"
       << "     " << q << " every ::1 using 0:4 with lines title 'Im f'\n";
  } else if (schema == "yukawa_error" && kind == PlotKind::potential) {
    os << "set xlabel 'r'\nset ylabel 'V(r)'\n"
       << "plot " << q << " every ::1 using 1:2 with lines title 'exact', \\\n"
       << "     " << q << " every ::1 using 1:3 with lines title 'approx'\n";
  } else if (schema == "yukawa_error") {
    os << "set xlabel 'r'\nset ylabel 'relative error'\nset logscale y\n"
       << "plot " << q << " every ::1 using 1:6 with lines title 'relative error'\n";
  } else if (schema == "snapshot" && kind == PlotKind::comparison) {
    os << "set xlabel 'x'\nset ylabel 'psi'\n"
       << "plot " << q << " every ::1 using 1:2 with lines title 'Re psi', \\\n"
       << "     " << q << " every ::1 using 1:4 with lines dashtype 2 title 'Re ansatz', \\\n"
       << "     " << q << " every ::1 using 1:3 with lines title 'Im psi', \\\n"
       << "     " << q << " every ::1 using 1:5 with lines dashtype 2 title 'Im ansatz'\n";
  } else if (schema == "snapshot") {
    os << "set xlabel 'x'\nset ylabel '|error|'\nset logscale y\n"
       << "plot " << q << " every ::1 using 1:6 with lines title 'abs error'\n";
  } else if (kind == PlotKind::comparison) {
    os << "set xlabel 'n_radial'\nset ylabel 'E'\n"
       << "plot " << q << " every ::1 using 1:3 with linespoints title 'potential a', \\\n"
       << "     " << q << " every ::1 using 1:4 with linespoints title 'potential b'\n";
  } else {
    os << "set xlabel 'n_radial'\nset ylabel 'relative difference'\nset logscale y\n"
       << "plot " << q << " every ::1 using 1:6 with linespoints title 'relative difference'\n";
  }
  return os.str();
}

const char* kind_name(PlotKind k) {
  switch (k) {
    case PlotKind::automatic: return "auto";
    case PlotKind::potential: return "potential";
    case PlotKind::error: return "error";
    case PlotKind::residual: return "residual";
    case PlotKind::trajectory: return "trajectory";
    case PlotKind::comparison: return "comparison";
  }
  return "?";
}

}  // namespace

PlotKind parse_plot_kind(const std::string& name) {
  for (PlotKind k : {PlotKind::automatic, PlotKind::potential, PlotKind::error, PlotKind::residual,
                     PlotKind::trajectory, PlotKind::comparison})
    if (name == kind_name(k)) return k;
  throw InvalidArgument("unknown plot kind '" + name + "'");
}

fs::path emit_gnuplot(const fs::path& csv, PlotKind kind) {
  std::ifstream is(csv);
  if (!is) throw UnknownSchema("cannot read " + csv.string());
  std::string header;
  std::getline(is, header);
  if (!header.empty() && header.back() == '\r') header.pop_back();
  const auto it = std::find_if(schemas().begin(), schemas().end(),
                               [&](const Schema& s) { return header == s.header; });
  if (it == schemas().end()) throw UnknownSchema("unrecognized CSV header in " + csv.string());
  if (kind == PlotKind::automatic) kind = it->default_kind;
  if (std::find(it->kinds.begin(), it->kinds.end(), kind) == it->kinds.end())
    throw UnknownSchema(std::string("plot kind '") + kind_name(kind) + "' does not apply to " +
                        it->name + " data");
  fs::path script = csv;
  script.replace_extension(".gp");
  fs::path png = csv.filename();
  png.replace_extension(".png");
  write_atomic(script, preamble(csv.filename().string(), png.string()) +
                           body(it->name, kind, csv.filename().string()));
  return script;
}

}  // namespace painlab::cli
