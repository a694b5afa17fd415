#include "uma/checkpoint.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>
#include <vector>

namespace uma {
namespace {

constexpr char kMagic[8] = {'U', 'M', 'A', 'S', 'N', 'A', 'P', '1'};

class Writer {
public:
    explicit Writer(std::ostream& out) : out_(out) {}
    void bytes(const void* p, std::size_t n) { out_.write(static_cast<const char*>(p), static_cast<std::streamsize>(n)); }
    template <typename U>
    void uint(U v) {
        unsigned char buf[sizeof(U)];
        for (std::size_t i = 0; i < sizeof(U); ++i) buf[i] = static_cast<unsigned char>(v >> (8 * i));
        bytes(buf, sizeof(U));
    }
    void f64(double v) { uint(std::bit_cast<std::uint64_t>(v)); }

private:
    std::ostream& out_;
};

class Reader {
public:
    explicit Reader(std::vector<unsigned char> data) : data_(std::move(data)) {}
    std::size_t offset() const { return pos_; }
    const unsigned char* take(std::size_t n, const char* what) {
        if (data_.size() - pos_ < n) throw CheckpointError(std::string("truncated checkpoint reading ") + what, pos_);
        const unsigned char* p = data_.data() + pos_;
        pos_ += n;
        return p;
    }
    template <typename U>
    U uint(const char* what) {
        const unsigned char* p = take(sizeof(U), what);
        U v = 0;
        for (std::size_t i = 0; i < sizeof(U); ++i) v |= static_cast<U>(U{p[i]} << (8 * i));
        return v;
    }
    double f64(const char* what) { return std::bit_cast<double>(uint<std::uint64_t>(what)); }
    bool at_end() const { return pos_ == data_.size(); }

private:
    std::vector<unsigned char> data_;
    std::size_t pos_ = 0;
};

}  // namespace

void write_checkpoint(std::ostream& out, const Snapshot& s) {
    Writer w(out);
    const Sigma& sigma = s.sigma();
    const auto n = static_cast<std::uint32_t>(sigma.size());
    w.bytes(kMagic, sizeof kMagic);
    w.uint(n);
    if (const auto* q = s.qual()) {
        w.uint(std::uint32_t{4});
        for (Rank r : q->matrix()) w.uint(r);
    } else {
        w.uint(std::uint32_t{8});
        for (double x : s.real()->matrix()) w.f64(x);
    }
    w.uint(static_cast<std::uint32_t>(sigma.n_pairs()));
    for (const auto& name : sigma.query_names()) {
        w.uint(static_cast<std::uint32_t>(name.size()));
        w.bytes(name.data(), name.size());
    }
    if (const auto* q = s.qual()) {
        w.uint(q->delta());
        w.uint(static_cast<std::uint8_t>(q->initialized() ? 1 : 0));
        w.uint(static_cast<std::uint64_t>(q->update_count()));
    } else {
        const auto& r = *s.real();
        for (double x : r.tau_table()) w.f64(x);
        w.uint(static_cast<std::uint8_t>(r.schedule().is_empirical() ? 0 : 1));
        w.f64(r.schedule().is_empirical() ? 0.0 : r.schedule().fixed_q());
        w.uint(static_cast<std::uint64_t>(r.steps()));
    }
    if (!out) throw std::runtime_error("failed to write checkpoint");
}

Snapshot read_checkpoint(std::istream& in) {
    std::vector<unsigned char> data{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    Reader r(std::move(data));
    const unsigned char* magic = r.take(sizeof kMagic, "magic");
    if (std::memcmp(magic, kMagic, sizeof kMagic) != 0) throw CheckpointError("bad magic", 0);
    const std::size_t n_off = r.offset();
    auto n = r.uint<std::uint32_t>("alphabet size");
    if (n < 2 || n % 2 != 0 || n > 1u << 15) throw CheckpointError("invalid alphabet size", n_off);
    const std::size_t width_off = r.offset();
    auto width = r.uint<std::uint32_t>("entry width");
    if (width != 4 && width != 8) throw CheckpointError("unsupported entry width", width_off);

    const std::size_t cells = std::size_t{n} * n;
    std::vector<Rank> ranks;
    std::vector<double> weights;
    if (width == 4) {
        ranks.resize(cells);
        for (auto& x : ranks) x = r.uint<std::uint32_t>("matrix entry");
    } else {
        weights.resize(cells);
        for (auto& x : weights) x = r.f64("matrix entry");
    }

    const std::size_t pairs_off = r.offset();
    auto pairs = r.uint<std::uint32_t>("pair count");
    if (std::size_t{pairs} * 2 + 2 != n) throw CheckpointError("pair count does not match alphabet size", pairs_off);
    std::vector<std::string> names;
    for (std::uint32_t i = 0; i < pairs; ++i) {
        auto len = r.uint<std::uint32_t>("name length");
        const unsigned char* p = r.take(len, "query name");
        names.emplace_back(reinterpret_cast<const char*>(p), len);
    }
    Sigma sigma = [&] {
        try {
            return Sigma(names);
        } catch (const std::invalid_argument& e) {
            throw CheckpointError(e.what(), pairs_off);
        }
    }();

    if (width == 4) {
        auto delta = r.uint<std::uint32_t>("delta");
        const std::size_t init_off = r.offset();
        auto init = r.uint<std::uint8_t>("initialized flag");
        auto updates = r.uint<std::uint64_t>("update count");
        if (!r.at_end()) throw CheckpointError("trailing bytes", r.offset());
        if (init > 1) throw CheckpointError("bad initialized flag", init_off);
        if (init == 0) return Snapshot(QualSnapshot(std::move(sigma), delta));
        return Snapshot(
            QualSnapshot::from_matrix(std::move(sigma), std::move(ranks), delta, static_cast<std::size_t>(updates)));
    }
    std::vector<double> tau(cells);
    for (auto& x : tau) x = r.f64("tau entry");
    const std::size_t sched_off = r.offset();
    auto sched = r.uint<std::uint8_t>("schedule");
    double q = r.f64("discount");
    auto steps = r.uint<std::uint64_t>("step count");
    if (!r.at_end()) throw CheckpointError("trailing bytes", r.offset());
    if (sched > 1) throw CheckpointError("unknown schedule", sched_off);
    try {
        auto schedule = sched == 0 ? DiscountSchedule::empirical() : DiscountSchedule::fixed(q);
        auto snap = RealSnapshot::from_matrix(std::move(sigma), std::move(weights), schedule, 0.5,
                                              static_cast<std::size_t>(steps));
        snap.set_tau_table(std::move(tau));
        return Snapshot(std::move(snap));
    } catch (const std::invalid_argument& e) {
        throw CheckpointError(e.what(), sched_off);
    }
}

void save_checkpoint(const std::string& path, const Snapshot& s) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_checkpoint(out, s);
}

Snapshot load_checkpoint(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_checkpoint(in);
}

}  // namespace uma
