#include "disk_cache.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace chebfam::cli {

namespace {

class FileLock {
public:
    FileLock(const std::filesystem::path& path, int operation) {
        fd_ = ::open(path.c_str(), O_RDWR | O_CREAT | O_CLOEXEC, 0644);
        if (fd_ < 0) throw std::system_error(errno, std::generic_category(), "open " + path.string());
        while (::flock(fd_, operation) != 0) {
            if (errno != EINTR) {
                const int err = errno;
                ::close(fd_);
                throw std::system_error(err, std::generic_category(), "flock " + path.string());
            }
        }
    }
    ~FileLock() {
        ::flock(fd_, LOCK_UN);
        ::close(fd_);
    }
    FileLock(const FileLock&) = delete;
    FileLock& operator=(const FileLock&) = delete;

private:
    int fd_ = -1;
};

std::string header(FamilyId family) {
    return "# " + generatorStamp() + " m=" + std::to_string(family.m) + " p=" + std::to_string(family.p);
}

struct Loaded {
    std::vector<TriangleRow> rows;
    std::uintmax_t validBytes = 0;
    bool stale = true;
};

// Reads the longest valid prefix of the file.
Loaded load(const std::filesystem::path& path, FamilyId family) {
    Loaded out;
    std::ifstream in(path, std::ios::binary);
    if (!in) return out;
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::size_t pos = 0;
    auto nextLine = [&](std::string& line) {
        const std::size_t end = content.find('\n', pos);
        if (end == std::string::npos) return false;
        line = content.substr(pos, end - pos);
        pos = end + 1;
        return true;
    };
    std::string line;
    if (!nextLine(line) || line != header(family)) return out;
    out.stale = false;
    out.validBytes = pos;
    long expected = family.m;
    while (nextLine(line)) {
        std::istringstream ls(line);
        long n = -1;
        if (!(ls >> n) || n != expected) break;
        TriangleRow row{n, {}};
        std::string token;
        bool ok = true;
        while (ls >> token) {
            BigInteger v;
            if (v.set_str(token, 10) != 0) { ok = false; break; }
            row.coeffs.push_back(std::move(v));
        }
        if (!ok || static_cast<long>(row.coeffs.size()) != n + 1) break;
        out.rows.push_back(std::move(row));
        out.validBytes = pos;
        ++expected;
    }
    return out;
}

}  // namespace

DiskTriangleCache::DiskTriangleCache(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::filesystem::create_directories(dir_);
}

std::filesystem::path DiskTriangleCache::fileFor(FamilyId family) const {
    return dir_ / ("triangle_m" + std::to_string(family.m) + "_p" + std::to_string(family.p) + ".txt");
}

long DiskTriangleCache::storedRows(FamilyId family) const {
    const auto path = fileFor(family);
    if (!std::filesystem::exists(path)) return 0;
    FileLock lock(path, LOCK_SH);
    return static_cast<long>(load(path, family).rows.size());
}

std::vector<TriangleRow> DiskTriangleCache::rows(FamilyId family, long maxN) const {
    requireValidFamily(family);
    if (maxN < family.m) throw std::invalid_argument("max-n must be >= m");
    const auto path = fileFor(family);
    FileLock lock(path, LOCK_EX);
    Loaded loaded = load(path, family);

    if (loaded.stale) {
        std::ofstream reset(path, std::ios::binary | std::ios::trunc);
        reset << header(family) << '\n';
        loaded.rows.clear();
    } else if (std::filesystem::file_size(path) != loaded.validBytes) {
        std::filesystem::resize_file(path, loaded.validBytes);
    }

    const long have = family.m + static_cast<long>(loaded.rows.size()) - 1;
    if (have < maxN) {
        std::ofstream append(path, std::ios::binary | std::ios::app);
        for (long n = have + 1; n <= maxN; ++n) {
            TriangleRow row{n, triangleFor(family).row(n)};
            append << n;
            for (const auto& c : row.coeffs) append << ' ' << c.get_str();
            append << '\n';
            loaded.rows.push_back(std::move(row));
        }
        append.flush();
        if (!append) throw std::runtime_error("failed writing cache file " + path.string());
    }
    loaded.rows.resize(static_cast<std::size_t>(maxN - family.m + 1));
    return loaded.rows;
}

}  // namespace chebfam::cli
