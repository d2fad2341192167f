// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace textrec {

// Row-major 8-bit raster, 1 (gray) or 3 (RGB) channels.
struct ImageBuffer {
  int height = 0;
  int width = 0;
  int channels = 0;
  std::vector<uint8_t> data;

  ImageBuffer() = default;
  ImageBuffer(int h, int w, int c, uint8_t fill = 0);

  uint8_t& at(int y, int x, int c) {
    return data[(static_cast<size_t>(y) * width + x) * channels + c];
  }
  uint8_t at(int y, int x, int c) const {
    return data[(static_cast<size_t>(y) * width + x) * channels + c];
  }
  size_t size() const { return data.size(); }
  bool operator==(const ImageBuffer&) const = default;
};

enum class ResizePolicy { stretch, pad_right };

// Format dispatch is by file extension for writes and by magic bytes for
// reads. PGM (P5) / PPM (P6) with maxval 255 are the bit-exact fixture
// formats; PNG/JPEG support depends on build configuration.
ImageBuffer load_image(const std::string& path);
void save_image(const ImageBuffer& img, const std::string& path);

ImageBuffer decode_pnm(const uint8_t* bytes, size_t len);
std::vector<uint8_t> encode_pnm(const ImageBuffer& img);

bool png_supported();
bool jpeg_supported();

// Bilinear resample with half-pixel-centered sampling. pad_right scales by
// target_h/h keeping aspect, then zero-pads (or stretches, if still too
// wide) to target_w.
ImageBuffer resize_to(const ImageBuffer& img, int target_h, int target_w,
                      ResizePolicy policy);

// ITU-R 601 luma, rounded half-up. Identity on single-channel input.
ImageBuffer to_grayscale(const ImageBuffer& img);

// Replicates the gray channel. Identity on 3-channel input.
ImageBuffer to_rgb(const ImageBuffer& img);

} // namespace textrec
