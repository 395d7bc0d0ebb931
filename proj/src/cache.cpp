#include "arshon/cache.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <istream>
#include <ostream>

namespace arshon {

namespace {

template <std::size_t N>
void put_le(std::ostream& os, std::uint64_t v) {
    std::array<char, N> bytes{};
    for (std::size_t i = 0; i < N; ++i) bytes[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
    os.write(bytes.data(), N);
}

template <std::size_t N>
std::uint64_t get_le(const unsigned char* p) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < N; ++i) v |= static_cast<std::uint64_t>(p[i]) << (8 * i);
    return v;
}

} // namespace

void write_prefix_cache(std::ostream& os, const FiniteWord& word) {
    os.write(cache_magic, 4);
    os.put(static_cast<char>(cache_version));
    put_le<4>(os, word.order());
    put_le<8>(os, word.size());
    const auto letters = word.letters();
    os.write(reinterpret_cast<const char*>(letters.data()), static_cast<std::streamsize>(letters.size()));
}

FiniteWord read_prefix_cache(std::istream& is) {
    std::array<unsigned char, cache_header_size> header{};
    if (!is.read(reinterpret_cast<char*>(header.data()), header.size()))
        throw Error(Errc::cache_format, "truncated header");
    if (!std::equal(header.begin(), header.begin() + 4, cache_magic))
        throw Error(Errc::cache_format, "bad magic");
    if (header[4] != cache_version)
        throw Error(Errc::cache_format, "unsupported version " + std::to_string(header[4]));
    const std::uint64_t order = get_le<4>(header.data() + 5);
    const std::uint64_t length = get_le<8>(header.data() + 9);
    if (order < Alphabet::min_order || order > Alphabet::max_order)
        throw Error(Errc::cache_format, "order " + std::to_string(order) + " out of range");
    std::vector<Letter> letters(static_cast<std::size_t>(length));
    if (!is.read(reinterpret_cast<char*>(letters.data()), static_cast<std::streamsize>(length)))
        throw Error(Errc::cache_format, "payload shorter than " + std::to_string(length) + " bytes");
    if (is.peek() != std::char_traits<char>::eof()) throw Error(Errc::cache_format, "trailing bytes after payload");
    try {
        return FiniteWord(Alphabet(static_cast<unsigned>(order)), std::move(letters));
    } catch (const Error& e) {
        throw Error(Errc::cache_format, e.what());
    }
}

FiniteWord load_prefix_cache(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return read_prefix_cache(in);
}

void save_prefix_cache(const std::filesystem::path& path, const FiniteWord& word) {
    const auto tmp = std::filesystem::path(path).concat(".tmp");
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        write_prefix_cache(out, word);
        if (!out.flush()) throw std::runtime_error("write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

std::filesystem::path cache_file_for(const std::filesystem::path& dir, Alphabet alphabet) {
    return dir / ("a" + std::to_string(alphabet.order()) + ".arsh");
}

FiniteWord obtain_prefix(Alphabet alphabet, std::size_t length,
                         const std::optional<std::filesystem::path>& cache_dir, std::ostream& diag) {
    if (!cache_dir) return generate_prefix(alphabet, length);
    const auto path = cache_file_for(*cache_dir, alphabet);
    std::error_code ec;
    if (std::filesystem::exists(path, ec)) {
        try {
            FiniteWord cached = load_prefix_cache(path);
            if (cached.alphabet() == alphabet && cached.size() >= length) return cached.slice(0, length);
        } catch (const std::exception& e) {
            diag << "warning: ignoring cache file " << path.string() << ": " << e.what() << '\n';
        }
    }
    FiniteWord word = generate_prefix(alphabet, length);
    try {
        std::filesystem::create_directories(*cache_dir);
        save_prefix_cache(path, word);
    } catch (const std::exception& e) {
        diag << "warning: could not update cache " << path.string() << ": " << e.what() << '\n';
    }
    return word;
}

} // namespace arshon
