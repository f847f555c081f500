#include "ggs/pairfile.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace ggs {

namespace {

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> toks;
  std::string cur;
  for (char ch : line) {
    if (ch == '#') break;
    if (ch == ' ' || ch == '\t' || ch == '\r') {
      if (!cur.empty()) toks.push_back(std::move(cur)), cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) toks.push_back(std::move(cur));
  return toks;
}

// "key=value" accessor over the tail of a directive.
std::string field(const std::vector<std::string>& toks, const std::string& key, int line,
                  bool required = true) {
  std::string prefix = key + "=";
  for (size_t i = 2; i < toks.size(); ++i)
    if (toks[i].rfind(prefix, 0) == 0) return toks[i].substr(prefix.size());
  if (required) throw ParseError(line, "missing " + prefix + "... on " + toks[0] + " directive");
  return "";
}

std::vector<int> parse_lift_signs(const std::string& text, int line) {
  std::vector<int> out;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (tok == "+1")
      out.push_back(1);
    else if (tok == "-1")
      out.push_back(-1);
    else
      throw ParseError(line, "lift sign '" + tok + "' must be +1 or -1");
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.empty() || out.size() > 2)
    throw ParseError(line, "lifts= takes one or two signs, got " + std::to_string(out.size()));
  return out;
}

}  // namespace

GGSPair parse_pair_text(std::string_view text) {
  GGSPair pair;
  bool named = false;
  std::istringstream is{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(is, raw)) {
    ++lineno;
    std::vector<std::string> toks = tokenize(raw);
    if (toks.empty()) continue;
    const std::string& head = toks[0];
    try {
      if (head == "pair") {
        if (named) throw ParseError(lineno, "second pair directive");
        if (toks.size() != 2) throw ParseError(lineno, "pair directive takes one name");
        pair.name = toks[1];
        named = true;
      } else if (head == "orientable") {
        if (toks.size() != 2 || (toks[1] != "true" && toks[1] != "false"))
          throw ParseError(lineno, "orientable takes true or false");
        pair.orientable = toks[1] == "true";
      } else if (head == "sing") {
        if (toks.size() < 2) throw ParseError(lineno, "sing directive needs an id");
        Singularity s;
        s.id = toks[1];
        if (pair.find(s.id)) throw ParseError(lineno, "singularity '" + s.id + "' declared twice");
        s.kind = parse_kind(field(toks, "kind", lineno));
        s.nature = parse_nature(field(toks, "nature", lineno));
        std::string lifts = field(toks, "lifts", lineno, false);
        if (!lifts.empty()) s.lift_count = std::stoi(lifts);
        pair.singularities.push_back(std::move(s));
      } else if (head == "line") {
        if (toks.size() < 2) throw ParseError(lineno, "line directive needs an id");
        FlowLine l;
        l.id = toks[1];
        for (const auto& existing : pair.lines)
          if (existing.id == l.id) throw ParseError(lineno, "line '" + l.id + "' declared twice");
        l.src = parse_generator_ref(field(toks, "src", lineno));
        l.dst = parse_generator_ref(field(toks, "dst", lineno));
        std::string part = field(toks, "part", lineno);
        if (part == "regular")
          l.part = LinePart::Regular;
        else if (part == "fold")
          l.part = LinePart::Fold;
        else
          throw ParseError(lineno, "part '" + part + "' must be regular or fold");
        l.lifts = parse_lift_signs(field(toks, "lifts", lineno), lineno);
        pair.lines.push_back(std::move(l));
      } else if (head == "fold") {
        if (toks.size() != 3) throw ParseError(lineno, "fold directive takes two singularity ids");
        pair.folds.push_back(FoldArc{toks[1], toks[2]});
      } else if (head == "order") {
        for (size_t i = 1; i < toks.size(); ++i) pair.order.push_back(parse_generator_ref(toks[i]));
      } else {
        throw ParseError(lineno, "unknown directive '" + head + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(lineno, e.what());
    }
  }
  if (!named) throw ParseError(lineno, "no pair directive");
  return pair;
}

GGSPair parse_pair_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_pair_text(buf.str());
}

std::string pair_to_text(const GGSPair& pair) {
  std::ostringstream os;
  os << "pair " << pair.name << "\n";
  os << "orientable " << (pair.orientable ? "true" : "false") << "\n";
  for (const auto& s : pair.singularities) {
    os << "sing " << s.id << " kind=" << s.kind.to_string() << " nature=" << nature_text(s.nature);
    if (s.lift_count) os << " lifts=" << *s.lift_count;
    os << "\n";
  }
  for (const auto& l : pair.lines) {
    os << "line " << l.id << " src=" << l.src.address() << " dst=" << l.dst.address() << " part="
       << (l.part == LinePart::Fold ? "fold" : "regular") << " lifts=";
    for (size_t i = 0; i < l.lifts.size(); ++i)
      os << (i ? "," : "") << (l.lifts[i] > 0 ? "+1" : "-1");
    os << "\n";
  }
  for (const auto& f : pair.folds) os << "fold " << f.a << " " << f.b << "\n";
  if (!pair.order.empty()) {
    os << "order";
    for (const auto& g : pair.order) os << " " << g.address();
    os << "\n";
  }
  return os.str();
}

}  // namespace ggs
