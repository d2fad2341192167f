// SPDX-License-Identifier: Apache-2.0
#include "imaging.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <memory>

#include "error.hpp"

#ifdef TEXTREC_WITH_PNG
#include <png.h>
#endif
#ifdef TEXTREC_WITH_JPEG
#include <jpeglib.h>

#include <csetjmp>
#endif

namespace textrec {

ImageBuffer::ImageBuffer(int h, int w, int c, uint8_t fill)
    : height(h), width(w), channels(c),
      data(static_cast<size_t>(h) * w * c, fill) {
  if (h < 1 || w < 1 || (c != 1 && c != 3))
    fail_invalid("bad image dimensions " + std::to_string(h) + "x" +
                 std::to_string(w) + "x" + std::to_string(c));
}

namespace {

std::vector<uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail_io("cannot open " + path);
  std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
  return bytes;
}

void write_file(const std::string& path, const void* data, size_t len) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail_io("cannot write " + path);
  out.write(static_cast<const char*>(data), static_cast<std::streamsize>(len));
  if (!out) fail_io("short write to " + path);
}

// PNM header tokens are whitespace separated; '#' starts a comment that
// runs to end of line.
struct PnmCursor {
  const uint8_t* p;
  const uint8_t* end;

  int next_int(const char* what) {
    for (;;) {
      while (p < end && (std::isspace(*p))) ++p;
      if (p < end && *p == '#') {
        while (p < end && *p != '\n') ++p;
        continue;
      }
      break;
    }
    if (p >= end || !std::isdigit(*p))
      fail_format(std::string("truncated PNM header (expected ") + what + ")");
    long v = 0;
    while (p < end && std::isdigit(*p)) {
      v = v * 10 + (*p - '0');
      if (v > 1000000) fail_format("PNM header value out of range");
      ++p;
    }
    return static_cast<int>(v);
  }
};

} // namespace

ImageBuffer decode_pnm(const uint8_t* bytes, size_t len) {
  if (len < 2 || bytes[0] != 'P' || (bytes[1] != '5' && bytes[1] != '6'))
    fail_format("unknown format (not P5/P6)");
  int channels = bytes[1] == '5' ? 1 : 3;
  PnmCursor cur{bytes + 2, bytes + len};
  int w = cur.next_int("width");
  int h = cur.next_int("height");
  int maxval = cur.next_int("maxval");
  if (w < 1 || h < 1) fail_format("bad PNM dimensions");
  if (maxval != 255) fail_format("unsupported PNM maxval " + std::to_string(maxval));
  // Exactly one whitespace byte separates the header from the raster.
  if (cur.p >= cur.end || !std::isspace(*cur.p)) fail_format("truncated PNM header");
  ++cur.p;
  size_t need = static_cast<size_t>(w) * h * channels;
  if (static_cast<size_t>(cur.end - cur.p) < need)
    fail_format("truncated PNM raster");
  ImageBuffer img(h, w, channels);
  std::memcpy(img.data.data(), cur.p, need);
  return img;
}

std::vector<uint8_t> encode_pnm(const ImageBuffer& img) {
  if (img.channels != 1 && img.channels != 3) fail_invalid("PNM needs 1 or 3 channels");
  char header[64];
  int n = std::snprintf(header, sizeof header, "P%c\n%d %d\n255\n",
                        img.channels == 1 ? '5' : '6', img.width, img.height);
  std::vector<uint8_t> out(header, header + n);
  out.insert(out.end(), img.data.begin(), img.data.end());
  return out;
}

bool png_supported() {
#ifdef TEXTREC_WITH_PNG
  return true;
#else
  return false;
#endif
}

bool jpeg_supported() {
#ifdef TEXTREC_WITH_JPEG
  return true;
#else
  return false;
#endif
}

#ifdef TEXTREC_WITH_PNG
namespace {

struct PngReadCtx {
  const uint8_t* p;
  size_t left;
};

void png_mem_read(png_structp png, png_bytep out, png_size_t n) {
  auto* ctx = static_cast<PngReadCtx*>(png_get_io_ptr(png));
  if (ctx->left < n) png_error(png, "truncated PNG stream");
  std::memcpy(out, ctx->p, n);
  ctx->p += n;
  ctx->left -= n;
}

ImageBuffer decode_png(const uint8_t* bytes, size_t len) {
  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) fail_io("libpng init failed");
  png_infop info = png_create_info_struct(png);
  ImageBuffer img;
  std::vector<png_bytep> rows;
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    fail_format("corrupt PNG");
  }
  PngReadCtx ctx{bytes, len};
  png_set_read_fn(png, &ctx, png_mem_read);
  png_read_info(png, info);

  png_uint_32 w = png_get_image_width(png, info);
  png_uint_32 h = png_get_image_height(png, info);
  int color = png_get_color_type(png, info);
  int depth = png_get_bit_depth(png, info);

  if (depth == 16) png_set_strip_16(png);
  if (color == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
  if (color == PNG_COLOR_TYPE_GRAY && depth < 8) png_set_expand_gray_1_2_4_to_8(png);
  if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
  if (color & PNG_COLOR_MASK_ALPHA) png_set_strip_alpha(png);
  png_read_update_info(png, info);

  int channels = png_get_channels(png, info);
  if (channels == 2) { // gray+alpha after strip should not occur, but be safe
    png_set_strip_alpha(png);
    png_read_update_info(png, info);
    channels = png_get_channels(png, info);
  }
  if (channels != 1 && channels != 3) {
    png_destroy_read_struct(&png, &info, nullptr);
    fail_format("unsupported PNG channel count");
  }
  img = ImageBuffer(static_cast<int>(h), static_cast<int>(w), channels);
  rows.resize(h);
  for (png_uint_32 y = 0; y < h; ++y)
    rows[y] = img.data.data() + static_cast<size_t>(y) * w * channels;
  png_read_image(png, rows.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);
  return img;
}

void encode_png(const ImageBuffer& img, const std::string& path) {
  FILE* fp = std::fopen(path.c_str(), "wb");
  if (!fp) fail_io("cannot write " + path);
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png_create_info_struct(png);
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    std::fclose(fp);
    fail_io("PNG write failed for " + path);
  }
  png_init_io(png, fp);
  png_set_IHDR(png, info, img.width, img.height, 8,
               img.channels == 1 ? PNG_COLOR_TYPE_GRAY : PNG_COLOR_TYPE_RGB,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
               PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  for (int y = 0; y < img.height; ++y)
    png_write_row(png, const_cast<png_bytep>(
        img.data.data() + static_cast<size_t>(y) * img.width * img.channels));
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
  std::fclose(fp);
}

} // namespace
#endif // TEXTREC_WITH_PNG

#ifdef TEXTREC_WITH_JPEG
namespace {

struct JpegErrorMgr {
  jpeg_error_mgr base;
  std::jmp_buf jump;
};

void jpeg_error_exit(j_common_ptr cinfo) {
  auto* mgr = reinterpret_cast<JpegErrorMgr*>(cinfo->err);
  std::longjmp(mgr->jump, 1);
}

ImageBuffer decode_jpeg(const uint8_t* bytes, size_t len) {
  jpeg_decompress_struct cinfo;
  JpegErrorMgr err;
  cinfo.err = jpeg_std_error(&err.base);
  err.base.error_exit = jpeg_error_exit;
  if (setjmp(err.jump)) {
    jpeg_destroy_decompress(&cinfo);
    fail_format("corrupt JPEG");
  }
  jpeg_create_decompress(&cinfo);
  jpeg_mem_src(&cinfo, const_cast<uint8_t*>(bytes), static_cast<unsigned long>(len));
  jpeg_read_header(&cinfo, TRUE);
  cinfo.out_color_space = cinfo.num_components == 1 ? JCS_GRAYSCALE : JCS_RGB;
  jpeg_start_decompress(&cinfo);
  int channels = cinfo.output_components;
  if (channels != 1 && channels != 3) {
    jpeg_destroy_decompress(&cinfo);
    fail_format("unsupported JPEG channel count");
  }
  ImageBuffer img(static_cast<int>(cinfo.output_height),
                  static_cast<int>(cinfo.output_width), channels);
  while (cinfo.output_scanline < cinfo.output_height) {
    JSAMPROW row = img.data.data() +
                   static_cast<size_t>(cinfo.output_scanline) * img.width * channels;
    jpeg_read_scanlines(&cinfo, &row, 1);
  }
  jpeg_finish_decompress(&cinfo);
  jpeg_destroy_decompress(&cinfo);
  return img;
}

void encode_jpeg(const ImageBuffer& img, const std::string& path) {
  FILE* fp = std::fopen(path.c_str(), "wb");
  if (!fp) fail_io("cannot write " + path);
  jpeg_compress_struct cinfo;
  JpegErrorMgr err;
  cinfo.err = jpeg_std_error(&err.base);
  err.base.error_exit = jpeg_error_exit;
  if (setjmp(err.jump)) {
    jpeg_destroy_compress(&cinfo);
    std::fclose(fp);
    fail_io("JPEG write failed for " + path);
  }
  jpeg_create_compress(&cinfo);
  jpeg_stdio_dest(&cinfo, fp);
  cinfo.image_width = img.width;
  cinfo.image_height = img.height;
  cinfo.input_components = img.channels;
  cinfo.in_color_space = img.channels == 1 ? JCS_GRAYSCALE : JCS_RGB;
  jpeg_set_defaults(&cinfo);
  jpeg_set_quality(&cinfo, 95, TRUE);
  jpeg_start_compress(&cinfo, TRUE);
  while (cinfo.next_scanline < cinfo.image_height) {
    JSAMPROW row = const_cast<JSAMPROW>(
        img.data.data() + static_cast<size_t>(cinfo.next_scanline) * img.width * img.channels);
    jpeg_write_scanlines(&cinfo, &row, 1);
  }
  jpeg_finish_compress(&cinfo);
  jpeg_destroy_compress(&cinfo);
  std::fclose(fp);
}

} // namespace
#endif // TEXTREC_WITH_JPEG

ImageBuffer load_image(const std::string& path) {
  std::vector<uint8_t> bytes = read_file(path);
  if (bytes.size() < 4) fail_format("truncated image file " + path);
  try {
    if (bytes[0] == 'P' && (bytes[1] == '5' || bytes[1] == '6'))
      return decode_pnm(bytes.data(), bytes.size());
    if (bytes[0] == 0x89 && bytes[1] == 'P' && bytes[2] == 'N' && bytes[3] == 'G') {
#ifdef TEXTREC_WITH_PNG
      return decode_png(bytes.data(), bytes.size());
#else
      fail_format("PNG support not built in");
#endif
    }
    if (bytes[0] == 0xff && bytes[1] == 0xd8) {
#ifdef TEXTREC_WITH_JPEG
      return decode_jpeg(bytes.data(), bytes.size());
#else
      fail_format("JPEG support not built in");
#endif
    }
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + e.what());
  }
  fail_format("unknown format: " + path);
}

void save_image(const ImageBuffer& img, const std::string& path) {
  auto dot = path.rfind('.');
  std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
  for (auto& ch : ext) ch = static_cast<char>(std::tolower(ch));
  if (ext == "pgm" || ext == "ppm" || ext == "pnm") {
    if (ext == "pgm" && img.channels != 1) fail_invalid("PGM requires 1 channel");
    if (ext == "ppm" && img.channels != 3) fail_invalid("PPM requires 3 channels");
    auto bytes = encode_pnm(img);
    write_file(path, bytes.data(), bytes.size());
    return;
  }
  if (ext == "png") {
#ifdef TEXTREC_WITH_PNG
    encode_png(img, path);
    return;
#else
    fail_invalid("PNG support not built in");
#endif
  }
  if (ext == "jpg" || ext == "jpeg") {
#ifdef TEXTREC_WITH_JPEG
    encode_jpeg(img, path);
    return;
#else
    fail_invalid("JPEG support not built in");
#endif
  }
  fail_invalid("unsupported image extension ." + ext);
}

namespace {

// Half-pixel-centered bilinear sample of one channel.
double sample_bilinear(const ImageBuffer& img, double sy, double sx, int c) {
  int x0 = static_cast<int>(std::floor(sx));
  int y0 = static_cast<int>(std::floor(sy));
  double fx = sx - x0;
  double fy = sy - y0;
  auto clampi = [](int v, int hi) { return v < 0 ? 0 : (v > hi ? hi : v); };
  int x1 = clampi(x0 + 1, img.width - 1);
  int y1 = clampi(y0 + 1, img.height - 1);
  x0 = clampi(x0, img.width - 1);
  y0 = clampi(y0, img.height - 1);
  double v00 = img.at(y0, x0, c), v01 = img.at(y0, x1, c);
  double v10 = img.at(y1, x0, c), v11 = img.at(y1, x1, c);
  double top = v00 + (v01 - v00) * fx;
  double bot = v10 + (v11 - v10) * fx;
  return top + (bot - top) * fy;
}

uint8_t to_u8(double v) {
  long r = std::lround(v);
  if (r < 0) r = 0;
  if (r > 255) r = 255;
  return static_cast<uint8_t>(r);
}

ImageBuffer resize_stretch(const ImageBuffer& img, int th, int tw) {
  if (th == img.height && tw == img.width) return img;
  ImageBuffer out(th, tw, img.channels);
  double sy_scale = static_cast<double>(img.height) / th;
  double sx_scale = static_cast<double>(img.width) / tw;
  for (int y = 0; y < th; ++y) {
    double sy = (y + 0.5) * sy_scale - 0.5;
    for (int x = 0; x < tw; ++x) {
      double sx = (x + 0.5) * sx_scale - 0.5;
      for (int c = 0; c < img.channels; ++c)
        out.at(y, x, c) = to_u8(sample_bilinear(img, sy, sx, c));
    }
  }
  return out;
}

} // namespace

ImageBuffer resize_to(const ImageBuffer& img, int target_h, int target_w,
                      ResizePolicy policy) {
  if (target_h < 1 || target_w < 1) fail_invalid("target dims must be >= 1");
  if (policy == ResizePolicy::stretch)
    return resize_stretch(img, target_h, target_w);

  // pad_right: aspect-preserving height scale, zero padding on the right.
  double scale = static_cast<double>(target_h) / img.height;
  int scaled_w = static_cast<int>(std::lround(img.width * scale));
  if (scaled_w < 1) scaled_w = 1;
  if (scaled_w >= target_w) return resize_stretch(img, target_h, target_w);
  ImageBuffer scaled = resize_stretch(img, target_h, scaled_w);
  ImageBuffer out(target_h, target_w, img.channels, 0);
  for (int y = 0; y < target_h; ++y)
    std::memcpy(&out.at(y, 0, 0), &scaled.at(y, 0, 0),
                static_cast<size_t>(scaled_w) * img.channels);
  return out;
}

ImageBuffer to_grayscale(const ImageBuffer& img) {
  if (img.channels == 1) return img;
  ImageBuffer out(img.height, img.width, 1);
  for (int y = 0; y < img.height; ++y)
    for (int x = 0; x < img.width; ++x) {
      double luma = 0.299 * img.at(y, x, 0) + 0.587 * img.at(y, x, 1) +
                    0.114 * img.at(y, x, 2);
      out.at(y, x, 0) = static_cast<uint8_t>(std::floor(luma + 0.5));
    }
  return out;
}

ImageBuffer to_rgb(const ImageBuffer& img) {
  if (img.channels == 3) return img;
  ImageBuffer out(img.height, img.width, 3);
  for (int y = 0; y < img.height; ++y)
    for (int x = 0; x < img.width; ++x)
      for (int c = 0; c < 3; ++c) out.at(y, x, c) = img.at(y, x, 0);
  return out;
}

} // namespace textrec
