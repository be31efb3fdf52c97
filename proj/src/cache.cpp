#include "genmat/cache.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace genmat {

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string cache_stem(const RingId& ring, const MultiDegree& d) {
  std::ostringstream os;
  os << ring_kind_str(ring.kind) << "-m" << ring.m << "-n" << ring.n << "-d";
  for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "x" : "") << d[i];
  os << "-" << kOrderTag;
  return os.str();
}

std::filesystem::path cache_file(const std::filesystem::path& dir, const RingId& ring,
                                 const MultiDegree& d) {
  return dir / (cache_stem(ring, d) + ".basis");
}

/******************************* serialization *******************************/

namespace {

void put_word(std::ostream& os, const Word& w) {
  os << w.size();
  for (int c : w) os << ' ' << c;
}

Word get_word(std::istream& is) {
  std::size_t len = 0;
  if (!(is >> len)) throw CacheCorrupt("cache: bad word length");
  Word w(len);
  for (auto& c : w)
    if (!(is >> c)) throw CacheCorrupt("cache: truncated word");
  return w;
}

void put_sparse(std::ostream& os, const SparseVector& v) {
  os << "v " << v.size();
  for (const auto& [idx, val] : v) os << ' ' << idx << ' ' << rat_str(val);
  os << '\n';
}

SparseVector get_sparse(std::istream& is) {
  std::string tag;
  std::size_t nnz = 0;
  if (!(is >> tag >> nnz) || tag != "v") throw CacheCorrupt("cache: bad vector line");
  SparseVector v;
  v.reserve(nnz);
  for (std::size_t k = 0; k < nnz; ++k) {
    Index idx;
    std::string val;
    if (!(is >> idx >> val)) throw CacheCorrupt("cache: truncated vector");
    v.emplace_back(idx, rat_parse(val));
  }
  return v;
}

std::string payload_str(const GradedBasis& b) {
  std::ostringstream os;
  os << "ring " << ring_kind_str(b.ring.kind) << ' ' << b.ring.m << ' ' << b.ring.n << '\n';
  os << "deg " << b.degree.size();
  for (auto d : b.degree) os << ' ' << d;
  os << '\n';

  os << "symbols " << b.symbols.size() << '\n';
  for (const auto& t : b.symbols) {
    os << "t " << t.factors.size();
    for (const auto& f : t.factors) {
      os << ' ';
      put_word(os, f);
    }
    os << ' ';
    put_word(os, t.tail);
    os << '\n';
  }

  os << "keys " << b.coords.size() << '\n';
  for (const auto& [pos, mon] : b.coords.keys()) {
    os << "k " << pos << ' ' << mon.terms().size();
    for (const auto& [v, e] : mon.terms())
      os << ' ' << v.h << ' ' << v.i << ' ' << v.j << ' ' << e;
    os << '\n';
  }

  os << "basis " << b.basis.size() << '\n';
  for (const auto& row : b.basis) put_sparse(os, row);

  os << "pivots " << b.pivot_symbols.size();
  for (auto p : b.pivot_symbols) os << ' ' << p;
  os << "\nend\n";
  return os.str();
}

GradedBasis parse_payload(std::istream& is) {
  GradedBasis b;
  std::string tag, kind;
  if (!(is >> tag >> kind >> b.ring.m >> b.ring.n) || tag != "ring")
    throw CacheCorrupt("cache: bad ring line");
  b.ring.kind = ring_kind_parse(kind);

  std::size_t count = 0;
  if (!(is >> tag >> count) || tag != "deg") throw CacheCorrupt("cache: bad deg line");
  b.degree.resize(count);
  for (auto& d : b.degree)
    if (!(is >> d)) throw CacheCorrupt("cache: truncated deg");

  if (!(is >> tag >> count) || tag != "symbols") throw CacheCorrupt("cache: bad symbols line");
  b.symbols.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    std::size_t nf = 0;
    if (!(is >> tag >> nf) || tag != "t") throw CacheCorrupt("cache: bad symbol line");
    TraceMonomial t;
    t.factors.reserve(nf);
    for (std::size_t f = 0; f < nf; ++f) t.factors.push_back(get_word(is));
    t.tail = get_word(is);
    b.symbols.push_back(std::move(t));
  }

  if (!(is >> tag >> count) || tag != "keys") throw CacheCorrupt("cache: bad keys line");
  for (std::size_t k = 0; k < count; ++k) {
    std::size_t pos = 0, nv = 0;
    if (!(is >> tag >> pos >> nv) || tag != "k") throw CacheCorrupt("cache: bad key line");
    Monomial mon;
    for (std::size_t v = 0; v < nv; ++v) {
      VarIndex var;
      std::int32_t e = 0;
      if (!(is >> var.h >> var.i >> var.j >> e)) throw CacheCorrupt("cache: truncated key");
      mon = mon * Monomial::var(var, e);
    }
    b.coords.append_key(pos, mon);
  }

  if (!(is >> tag >> count) || tag != "basis") throw CacheCorrupt("cache: bad basis line");
  b.basis.reserve(count);
  for (std::size_t k = 0; k < count; ++k) b.basis.push_back(get_sparse(is));

  if (!(is >> tag >> count) || tag != "pivots") throw CacheCorrupt("cache: bad pivots line");
  b.pivot_symbols.resize(count);
  for (auto& p : b.pivot_symbols)
    if (!(is >> p)) throw CacheCorrupt("cache: truncated pivots");

  if (!(is >> tag) || tag != "end") throw CacheCorrupt("cache: missing end marker");
  return b;
}

}  // namespace

/********************************* file I/O **********************************/

void save_basis(const std::filesystem::path& dir, const GradedBasis& b) {
  std::filesystem::create_directories(dir);
  const std::string payload = payload_str(b);

  std::ostringstream head;
  head << kCacheFormat << '\n' << kOrderTag << '\n';
  head << "checksum " << std::hex << fnv1a64(payload) << std::dec << '\n';

  const auto target = cache_file(dir, b.ring, b.degree);
  const auto tmp = target.string() + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cache: cannot write " + tmp);
    os << head.str() << payload;
    os.flush();
    if (!os) throw std::runtime_error("cache: write failed for " + tmp);
  }
  std::filesystem::rename(tmp, target);
}

CacheLookup load_basis(const std::filesystem::path& dir, const RingId& ring,
                       const MultiDegree& d) {
  const auto path = cache_file(dir, ring, d);
  std::ifstream is(path, std::ios::binary);
  if (!is) return {CacheStatus::Miss, std::nullopt};

  std::string format, order, sumline;
  if (!std::getline(is, format)) throw CacheCorrupt("cache: empty file " + path.string());
  if (!std::getline(is, order)) throw CacheCorrupt("cache: missing order tag in " + path.string());
  if (format != kCacheFormat || order != kOrderTag) return {CacheStatus::Stale, std::nullopt};
  if (!std::getline(is, sumline) || sumline.rfind("checksum ", 0) != 0)
    throw CacheCorrupt("cache: missing checksum line in " + path.string());
  const std::uint64_t expect = std::stoull(sumline.substr(9), nullptr, 16);

  std::ostringstream rest;
  rest << is.rdbuf();
  const std::string payload = rest.str();
  if (fnv1a64(payload) != expect)
    throw CacheCorrupt("cache: checksum mismatch in " + path.string());

  std::istringstream ps(payload);
  GradedBasis b = parse_payload(ps);
  if (b.ring.kind != ring.kind || b.ring.m != ring.m || b.ring.n != ring.n || b.degree != d)
    throw CacheCorrupt("cache: entry does not match its key " + path.string());
  return {CacheStatus::Hit, std::move(b)};
}

/****************************** orchestration ********************************/

GradedBasis cached_component_basis(const std::optional<std::filesystem::path>& dir,
                                   const RingId& ring, const MultiDegree& d,
                                   const Budget& budget, const LinAlgOptions& opts,
                                   bool* from_cache) {
  if (from_cache) *from_cache = false;
  if (dir) {
    auto hit = load_basis(*dir, ring, d);
    if (hit.status == CacheStatus::Hit) {
      if (from_cache) *from_cache = true;
      return std::move(*hit.basis);
    }
  }
  GradedBasis b = graded_component_basis(ring, d, budget, opts);
  if (dir) save_basis(*dir, b);
  return b;
}

}  // namespace genmat
